# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Compiled grid oracle: the int64 twin of `_gridkernel_py`.

The caller guarantees all integerized payoffs stay inside the int64-safe
bound (checked in the package `__init__`); within it every intermediate
product fits in 64 bits, so results are exact.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc


cdef inline int _sgn(long long value) noexcept nogil:
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0


def grid_oracle(int n, h_row, h_col, boxes):
    """See `_gridkernel_py.grid_oracle`; identical contract and results."""
    cdef long long a1 = h_row[0], b1 = h_row[1], c1 = h_row[2], d1 = h_row[3]
    cdef long long a2 = h_col[0], b2 = h_col[1], c2 = h_col[2], d2 = h_col[3]

    cdef long long adv_row_a = a1 - c1, adv_row_b = b1 - d1
    cdef long long adv_col_a = a2 - b2, adv_col_b = c2 - d2

    cdef long long k_ra_ba = a1 - c1, k_ra_bb = b1 - d1
    cdef long long k_rb_aa = c1 - a1, k_rb_ab = d1 - b1
    cdef long long k_ca_ab = a2 - b2, k_ca_bb = c2 - d2
    cdef long long k_cb_aa = b2 - a2, k_cb_ba = d2 - c2

    cdef Py_ssize_t n_boxes = len(boxes)
    cdef int *sign_row = <int *> PyMem_Malloc((n + 1) * sizeof(int))
    cdef int *sign_col = <int *> PyMem_Malloc((n + 1) * sizeof(int))
    cdef long long *box_bounds = <long long *> PyMem_Malloc(max(4 * n_boxes, 1) * sizeof(long long))
    if sign_row == NULL or sign_col == NULL or box_bounds == NULL:
        PyMem_Free(sign_row)
        PyMem_Free(sign_col)
        PyMem_Free(box_bounds)
        raise MemoryError()

    cdef Py_ssize_t k
    for k in range(n_boxes):
        box_bounds[4 * k + 0] = boxes[k][0]
        box_bounds[4 * k + 1] = boxes[k][1]
        box_bounds[4 * k + 2] = boxes[k][2]
        box_bounds[4 * k + 3] = boxes[k][3]

    cdef int i, j, sr, sc
    cdef long long ni, s_aa, s_ab, s_ba, s_bb
    cdef bint row_ok, col_ok, nash_sign, nash_sum, in_box
    cdef int code = 0, bad_i = 0, bad_j = 0

    try:
        for j in range(n + 1):
            sign_row[j] = _sgn(j * adv_row_a + (n - j) * adv_row_b)
        for i in range(n + 1):
            sign_col[i] = _sgn(i * adv_col_a + (n - i) * adv_col_b)

        for i in range(n + 1):
            sc = sign_col[i]
            ni = n - i
            for j in range(n + 1):
                sr = sign_row[j]
                row_ok = sr == 0 or (sr > 0 and i == n) or (sr < 0 and i == 0)
                if j == 0:
                    col_ok = sc <= 0
                elif j == n:
                    col_ok = sc >= 0
                else:
                    col_ok = sc == 0
                nash_sign = row_ok and col_ok

                s_aa = <long long> i * j
                s_ab = <long long> i * (n - j)
                s_ba = ni * j
                s_bb = ni * (n - j)
                nash_sum = (
                    k_ra_ba * s_ba + k_ra_bb * s_bb <= 0
                    and k_rb_aa * s_aa + k_rb_ab * s_ab <= 0
                    and k_ca_ab * s_ab + k_ca_bb * s_bb <= 0
                    and k_cb_aa * s_aa + k_cb_ba * s_ba <= 0
                )
                if nash_sign != nash_sum:
                    code, bad_i, bad_j = 1, i, j
                    break

                in_box = False
                for k in range(n_boxes):
                    if (box_bounds[4 * k] <= i <= box_bounds[4 * k + 1]
                            and box_bounds[4 * k + 2] <= j <= box_bounds[4 * k + 3]):
                        in_box = True
                        break
                if nash_sign != in_box:
                    code, bad_i, bad_j = 2, i, j
                    break
            if code:
                break
    finally:
        PyMem_Free(sign_row)
        PyMem_Free(sign_col)
        PyMem_Free(box_bounds)

    if code:
        return (code, bad_i, bad_j)
    return None
