"""Print the toy dictionary's closure, kernel, levels and minimum grounding set."""

import sys
from pathlib import Path

from groundkernel.digraph import build_graph, scc
from groundkernel.kernel import grounding_kernel
from groundkernel.lexicon import parse_text
from groundkernel.mgs import minimum_grounding_set
from groundkernel.reachability import is_grounding_set, reachable_set

DEFAULT = Path(__file__).resolve().parent.parent / "tests" / "data" / "toy.txt"


def main(path=DEFAULT):
    with open(path, encoding="utf-8") as fh:
        g = build_graph(parse_text(fh))
    print(f"{len(g)} words, {g.arc_count} arcs")

    seed = {"bad", "light", "not", "thing"}
    res = reachable_set(g, seed)
    for k, layer in enumerate(res.layers()):
        print(f"R^{k} adds {', '.join(layer)}")
    print("grounding set:", is_grounding_set(g, seed), "| with 'or':", is_grounding_set(g, seed | {"or"}))

    print("components:", " ".join("{" + ",".join(sorted(c)) + "}" for c in scc(g).components))
    kr = grounding_kernel(g)
    print("kernel:", ", ".join(sorted(kr.kernel)))
    for level, words in kr.levels().items():
        print(f"level {level}: {', '.join(words)}")
    mgs = minimum_grounding_set(g)
    print(f"minimum grounding set ({len(mgs.chosen)}, exact={mgs.exact}):", ", ".join(sorted(mgs.chosen)))


if __name__ == "__main__":
    main(*sys.argv[1:])
