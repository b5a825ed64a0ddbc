####################################################################
# ### variable.py                                                ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
from typing import Callable, Dict, List, Optional, Sequence, Text, Tuple, Union

import numpy as np

from gin_kit_library.errors import ContractError

# maps the gradient of an op's output to the gradient contribution for one of its inputs
GradFn = Callable[[np.ndarray], np.ndarray]
ArrayLike = Union[float, int, np.ndarray, "Variable"]


####################################################################
# Class: Variable                                                ###
####################################################################
class Variable(object):
    """
    A node of a define-by-run computation graph. Holds a float64 array and, after backward(), the gradient of the
    root with respect to it. Leaves created with requires_grad=True accumulate gradients additively across uses and
    across backward passes until zero_grad() is called.
    """

    # numpy defers mixed arithmetic to the reflected Variable operators
    __array_ufunc__ = None

    def __init__(self, value: ArrayLike, requires_grad: bool = False,
                 parents: Sequence[Tuple["Variable", GradFn]] = (), name: Optional[Text] = None) -> None:
        """
        Constructor for Variable objects.

        :param value: The array value; converted to float64.
        :param requires_grad: Whether gradients should be tracked for this leaf.
        :param parents: (input, gradient function) pairs recorded by the op that produced this value.
        :param name: Optional name used in error messages and checkpoints.
        """
        self.value: np.ndarray = np.asarray(value, dtype=np.float64)
        self.grad: Optional[np.ndarray] = None
        self.name: Optional[Text] = name
        self._parents: Tuple[Tuple[Variable, GradFn], ...] = tuple((p, fn) for p, fn in parents if p.requires_grad)
        self.requires_grad: bool = bool(requires_grad) or len(self._parents) > 0

    @property
    def shape(self) -> Tuple[int, ...]:
        return self.value.shape

    @property
    def ndim(self) -> int:
        return self.value.ndim

    @property
    def is_leaf(self) -> bool:
        return len(self._parents) == 0

    @property
    def T(self) -> "Variable":
        from gin_kit_library.diffengine import ops
        return ops.transpose(self)

    def zero_grad(self) -> None:
        self.grad = None

    def numpy(self) -> np.ndarray:
        return self.value

    # arithmetic operators delegate to ops
    def __add__(self, other: ArrayLike) -> "Variable":
        from gin_kit_library.diffengine import ops
        return ops.add(self, other)

    def __radd__(self, other: ArrayLike) -> "Variable":
        from gin_kit_library.diffengine import ops
        return ops.add(other, self)

    def __sub__(self, other: ArrayLike) -> "Variable":
        from gin_kit_library.diffengine import ops
        return ops.subtract(self, other)

    def __rsub__(self, other: ArrayLike) -> "Variable":
        from gin_kit_library.diffengine import ops
        return ops.subtract(other, self)

    def __mul__(self, other: ArrayLike) -> "Variable":
        from gin_kit_library.diffengine import ops
        return ops.multiply(self, other)

    def __rmul__(self, other: ArrayLike) -> "Variable":
        from gin_kit_library.diffengine import ops
        return ops.multiply(other, self)

    def __truediv__(self, other: ArrayLike) -> "Variable":
        from gin_kit_library.diffengine import ops
        return ops.divide(self, other)

    def __rtruediv__(self, other: ArrayLike) -> "Variable":
        from gin_kit_library.diffengine import ops
        return ops.divide(other, self)

    def __neg__(self) -> "Variable":
        from gin_kit_library.diffengine import ops
        return ops.neg(self)

    def __matmul__(self, other: ArrayLike) -> "Variable":
        from gin_kit_library.diffengine import ops
        return ops.matmul(self, other)

    def __getitem__(self, key) -> "Variable":
        from gin_kit_library.diffengine import ops
        return ops.getitem(self, key)

    def __repr__(self) -> Text:
        label = f"'{self.name}', " if self.name else ""
        return f"Variable({label}shape={self.shape}, requires_grad={self.requires_grad})"


####################################################################
# Class: Parameter                                               ###
####################################################################
class Parameter(Variable):
    """
    A trainable leaf.
    """

    def __init__(self, value: ArrayLike, name: Optional[Text] = None) -> None:
        super().__init__(value, requires_grad=True, name=name)


def as_variable(x: ArrayLike) -> Variable:
    return x if isinstance(x, Variable) else Variable(x)


def _topological_order(root: Variable) -> List[Variable]:
    order: List[Variable] = []
    visited = set()
    stack: List[Tuple[Variable, bool]] = [(root, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded:
            order.append(node)
            continue
        if id(node) in visited:
            continue
        visited.add(id(node))
        stack.append((node, True))
        for parent, _ in node._parents:
            if id(parent) not in visited:
                stack.append((parent, False))
    return order


def backward(root: Variable, grad: Optional[np.ndarray] = None) -> None:
    """
    Back-propagates from root and accumulates gradients into every requires-grad leaf reachable from it.
    Intermediate values do not keep gradients.

    :param root: The output to differentiate. Must be a scalar unless grad is given.
    :param grad: The gradient seeding the pass, of root's shape.
    :raises ContractError: If root is not scalar and no seed gradient is given, or if the seed shape is wrong.
    """
    if grad is None:
        if root.value.size != 1:
            raise ContractError(f"backward() needs a scalar root, got shape {root.shape}")
        grad = np.ones_like(root.value)
    else:
        grad = np.asarray(grad, dtype=np.float64)
        if grad.shape != root.shape:
            raise ContractError(f"Seed gradient shape {grad.shape} does not match root shape {root.shape}")

    if not root.requires_grad:
        return

    pending: Dict[int, np.ndarray] = {id(root): grad}
    for node in reversed(_topological_order(root)):
        node_grad = pending.pop(id(node), None)
        if node_grad is None:
            continue
        if node.is_leaf:
            node.grad = node_grad.copy() if node.grad is None else node.grad + node_grad
            continue
        for parent, fn in node._parents:
            contribution = fn(node_grad)
            key = id(parent)
            pending[key] = contribution if key not in pending else pending[key] + contribution
