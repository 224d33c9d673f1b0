"""Spectral flow: profiles of flowed modules and their characters."""
from nappiwitten.characters import Window, character, compare_characters, flowed_character_table
from nappiwitten.lattice import flow_profile, target_matches
from nappiwitten.modules import GV1, Third, vacuum
from nappiwitten.scalars import Q


def main():
    window = Window(3, (-2, 2))
    samples = [(vacuum(), (1, 2)), (vacuum(), (-2, 0)), (GV1(1, 0, Q(1, 2)), (1, 1)),
               (Third(Q(1, 5), Q(3, 2), Q(1, 7), 0), (1, 0))]
    for spec, alpha in samples:
        profile = flow_profile(spec, alpha)
        target = profile["target"]
        table, _, checked = flowed_character_table(spec, alpha, window)
        same = compare_characters(table, character(target, window))
        print(f"{spec.describe()} by {alpha} -> {target.describe()}")
        print(f"    thresholds {profile['thresholds']}  c0={profile['c0']} d0={profile['d0']}")
        print(f"    profile matches: {target_matches(profile, target)}  character: {same}"
              f"  ({checked} L(0) checks)")


if __name__ == "__main__":
    main()
