# cython: language_level=3
"""Compiled mask kernels: the word-level twins of ``_kernels_py``.

Only universes of at most 64 objects are handled here (one machine word
per parameter); the backend routes larger universes to the pure-Python
kernels.  Semantics of every function match ``_kernels_py`` exactly.
"""

from cpython.ref cimport Py_INCREF
from cpython.tuple cimport PyTuple_GET_ITEM, PyTuple_New, PyTuple_SET_ITEM

__all__ = [
    "intersection_masks",
    "union_masks",
    "complement_masks",
    "difference_masks",
    "subset_masks",
]

cdef extern from "Python.h":
    unsigned long long PyLong_AsUnsignedLongLong(object) except? 0xFFFFFFFFFFFFFFFFULL
    object PyLong_FromUnsignedLongLong(unsigned long long)


cdef inline void _check_lengths(tuple a, tuple b) except *:
    if len(a) != len(b):
        raise ValueError(f"mask length mismatch: {len(a)} vs {len(b)}")


cdef inline tuple _binary(tuple a, tuple b, int op):
    cdef Py_ssize_t i, n = len(a)
    cdef tuple out = PyTuple_New(n)
    cdef unsigned long long x, y, r
    cdef object item
    for i in range(n):
        x = PyLong_AsUnsignedLongLong(<object>PyTuple_GET_ITEM(a, i))
        y = PyLong_AsUnsignedLongLong(<object>PyTuple_GET_ITEM(b, i))
        if op == 0:
            r = x & y
        elif op == 1:
            r = x | y
        else:
            r = x & ~y
        item = PyLong_FromUnsignedLongLong(r)
        Py_INCREF(item)
        PyTuple_SET_ITEM(out, i, item)
    return out


def intersection_masks(tuple a, tuple b):
    _check_lengths(a, b)
    return _binary(a, b, 0)


def union_masks(tuple a, tuple b):
    _check_lengths(a, b)
    return _binary(a, b, 1)


def difference_masks(tuple a, tuple b):
    _check_lengths(a, b)
    return _binary(a, b, 2)


def complement_masks(tuple a, unsigned long long full):
    cdef Py_ssize_t i, n = len(a)
    cdef tuple out = PyTuple_New(n)
    cdef unsigned long long x
    cdef object item
    for i in range(n):
        x = PyLong_AsUnsignedLongLong(<object>PyTuple_GET_ITEM(a, i))
        item = PyLong_FromUnsignedLongLong(full ^ x)
        Py_INCREF(item)
        PyTuple_SET_ITEM(out, i, item)
    return out


def subset_masks(tuple a, tuple b):
    _check_lengths(a, b)
    cdef Py_ssize_t i, n = len(a)
    cdef unsigned long long x, y
    for i in range(n):
        x = PyLong_AsUnsignedLongLong(<object>PyTuple_GET_ITEM(a, i))
        y = PyLong_AsUnsignedLongLong(<object>PyTuple_GET_ITEM(b, i))
        if x & ~y:
            return False
    return True
