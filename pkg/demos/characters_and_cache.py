"""Character tables, the quotient comparison and the on-disk cache."""
import tempfile

from nappiwitten.algebra import b
from nappiwitten.characters import CellCache, Window, character, compare_characters
from nappiwitten.modules import GV0, GV1, HW, Quotient, vacuum
from nappiwitten.partitions import colored_partition_counts
from nappiwitten.serialize import dumps
from nappiwitten.vectors import ModuleVector


def main():
    print("vacuum by degree:", character(vacuum(), Window(5)).by_degree())
    print("partition oracle:", colored_partition_counts(4, 5))

    inner = GV1(2, 2, 0)
    quo = Quotient(inner, (ModuleVector(inner, {((b(2),), HW): 1}),))
    window = Window(3, (-2, 2), 0)
    print("GV1(2,2,0)/<b(2)1> vs GV0(2,0):",
          compare_characters(character(quo, window), character(GV0(2, 0), window)))
    print("GV1(2,2,0) vs GV0(2,0):",
          compare_characters(character(inner, window), character(GV0(2, 0), window)))

    with tempfile.TemporaryDirectory() as tmp:
        cache = CellCache(tmp)
        cold = dumps(character(inner, window, cache=cache).to_json())
        warm = dumps(character(inner, window, cache=cache).to_json())
        print("cold and warm cache tables identical:", cold == warm)


if __name__ == "__main__":
    main()
