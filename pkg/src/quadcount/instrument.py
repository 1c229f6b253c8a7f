"""Machine-independent work counter.

The engine charges one unit for each logical probe it performs:

  * an adjacency membership test or degree lookup,
  * each vertex touched while iterating a neighbor list or the high-degree
    vertex set,
  * each auxiliary table read or write.

Wall-clock time depends on the interpreter; these counts do not, so the
scaling study compares them across graph sizes. The counter is a bare
attribute on purpose - hot loops do `ops.n += len(...)` without a call.
"""


class OpCounter:
    __slots__ = ("n",)

    def __init__(self) -> None:
        self.n = 0

    def reset(self) -> None:
        self.n = 0

    def snapshot(self) -> int:
        return self.n
