from model import RESERVED_PREFIX

COMPLEMENT_PREFIX = f'{RESERVED_PREFIX}co_'


def complement_symbol(relation: str) -> str:
    """Name of the generated relation holding the complement of `relation`."""
    return f'{COMPLEMENT_PREFIX}{relation}'


def is_complement(relation: str) -> bool:
    return relation.startswith(COMPLEMENT_PREFIX)
