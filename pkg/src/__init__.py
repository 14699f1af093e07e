"""yamabe-lab - numerical gradient k-Yamabe solitons conformal to pseudo-Euclidean space."""

__version__ = "0.1.0"
