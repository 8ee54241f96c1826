"""Deterministic synthetic genealogies with planted name variants.

Each family carries one base forename down a fixed number of generations;
every child either inherits the base form or a 1-2 edit mutation of it, so
the planted ground truth (base -> observed variants) is known exactly. The
base pools are pre-filtered to pairwise edit distance >= 4, which keeps
variants of different families from colliding.
"""

from __future__ import annotations

import random
from functools import lru_cache

from .normalize import normalize_name
from .records import GroundTruthEntry, RawProfile
from .strsim import edit_distance

_FORENAME_POOL = (
    "abigail", "adelaide", "agnetha", "alexander", "ambrose", "anastasia",
    "archibald", "arnold", "augustin", "barnaby", "bartholomew", "beatrice",
    "benedict", "bernadette", "bertram", "brunhilda", "casimir", "cedric",
    "charlotte", "clementine", "cornelius", "crispin", "cuthbert", "dagmar",
    "demetrius", "dorothea", "edmund", "eleanora", "emmanuel", "ernestine",
    "eugenia", "ezekiel", "felicity", "ferdinand", "fitzgerald", "florence",
    "frederick", "genevieve", "gideon", "gilbert", "griselda", "gustave",
    "hamish", "harriet", "hezekiah", "hildegard", "horatio", "ignatius",
    "immanuel", "isadora", "jeremiah", "jocelyn", "josephine", "kasimira",
    "lancelot", "lavinia", "leopold", "lucinda", "magdalena", "marguerite",
    "matthias", "maximilian", "melchior", "millicent", "mordecai", "nathaniel",
    "nicodemus", "octavia", "ophelia", "oswald", "peregrine", "persephone",
    "philippa", "phineas", "prudence", "quentin", "reginald", "rosalind",
    "rutherford", "salvador", "sebastian", "seraphina", "sigmund", "solomon",
    "stanislav", "sylvester", "tabitha", "thaddeus", "theodora", "tobias",
    "ulysses", "valentina", "vendela", "victoria", "wilhelmina", "winifred",
    "xenophon", "yolanda", "zachariah", "zenobia",
)

_SURNAME_POOL = (
    "abernathy", "ashworth", "blackwood", "carmichael", "delacroix",
    "eastwood", "fairbanks", "galbraith", "hathaway", "ironside",
    "kingsley", "lockhart", "merriweather", "northcott", "okonkwo",
    "pemberton", "quarrington", "ravenscroft", "silverstone", "thornbury",
    "underwood", "vanderberg", "wetherell", "yarborough", "zimmerman",
)

_ALPHABET = "abcdefghijklmnopqrstuvwxyz"


@lru_cache(maxsize=None)
def _distinct_pool(pool: tuple[str, ...], min_distance: int = 4) -> tuple[str, ...]:
    """Greedy subset with pairwise edit distance >= min_distance."""
    kept: list[str] = []
    for name in pool:
        if all(edit_distance(name, other) >= min_distance for other in kept):
            kept.append(name)
    return tuple(kept)


def _mutate(base: str, rng: random.Random, pool: frozenset[str]) -> str:
    """A 1-2 edit variant of ``base`` that survives normalization unchanged
    and collides with no pool name."""
    edits = rng.choice((1, 2))
    for _ in range(200):
        chars = list(base)
        for _ in range(edits):
            op = rng.choice(("insert", "delete", "substitute"))
            if op == "insert":
                pos = rng.randrange(len(chars) + 1)
                chars.insert(pos, rng.choice(_ALPHABET))
            elif op == "delete" and len(chars) > 3:
                del chars[rng.randrange(len(chars))]
            else:
                pos = rng.randrange(len(chars))
                chars[pos] = rng.choice(_ALPHABET)
        variant = "".join(chars)
        if variant == base or variant in pool:
            continue
        if not 1 <= edit_distance(base, variant) <= 2:
            continue
        if normalize_name(variant) != variant:
            continue
        return variant
    raise RuntimeError(f"could not mutate {base!r} after 200 attempts")


def generate_synthetic_genealogy(
    seed: int,
    families: int,
    generations: int,
    variant_rate: float,
) -> tuple[list[RawProfile], list[GroundTruthEntry]]:
    """Seeded family trees plus the planted base -> variants ground truth.

    Every lineage member descends from a founder couple; children take the
    family surname and, with probability ``variant_rate``, a mutated form of
    the founder's forename (ED 1-2), otherwise the exact founder forename.
    Spouses marry in with unrelated pool names. Identical seeds give
    identical output, byte for byte once serialized.
    """
    if generations < 2:
        raise ValueError("generations must be >= 2")
    if not 0 < variant_rate <= 1:
        raise ValueError("variant_rate must be in (0, 1]")
    if families < 1:
        raise ValueError("families must be >= 1")

    rng = random.Random(seed)
    forenames = _distinct_pool(_FORENAME_POOL)
    surnames = _distinct_pool(_SURNAME_POOL)
    pool_set = frozenset(forenames)

    profiles: list[RawProfile] = []
    planted: dict[str, set[str]] = {}
    counter = 0

    def new_profile(forename: str, surname: str, father: str | None, mother: str | None) -> RawProfile:
        nonlocal counter
        counter += 1
        profile = RawProfile(
            profile_id=f"p{counter:08d}",
            forename=forename.title(),
            surname=surname.title(),
            father_id=father,
            mother_id=mother,
        )
        profiles.append(profile)
        return profile

    for _ in range(families):
        base = rng.choice(forenames)
        family_surname = rng.choice(surnames)
        planted.setdefault(base, set())
        founder = new_profile(base, family_surname, None, None)
        spouse = new_profile(rng.choice(forenames), rng.choice(surnames), None, None)
        couples = [(founder, spouse)]
        for generation in range(1, generations):
            next_couples: list[tuple[RawProfile, RawProfile]] = []
            for father, mother in couples:
                for _ in range(rng.randint(1, 3)):
                    if rng.random() < variant_rate:
                        forename = _mutate(base, rng, pool_set)
                        planted[base].add(forename)
                    else:
                        forename = base
                    child = new_profile(forename, family_surname, father.profile_id, mother.profile_id)
                    if generation < generations - 1:
                        partner = new_profile(rng.choice(forenames), rng.choice(surnames), None, None)
                        next_couples.append((child, partner))
            couples = next_couples

    ground_truth = [
        GroundTruthEntry(query_name=base, synonyms=frozenset(variants))
        for base, variants in sorted(planted.items())
        if variants
    ]
    return profiles, ground_truth
