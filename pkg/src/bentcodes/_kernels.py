"""Hot loops, with two interchangeable backends.

The default backend compiles the kernels with numba; setting the environment
variable BENTCODES_NO_NUMBA=1 (or running without numba installed) selects
pure-numpy fallbacks instead.  Both backends are importable side by side so
tests and the benchmark can compare them; the public wrappers at the bottom
dispatch on the flag computed at import time.

Bit conventions: vectors are packed LSB-first into little-endian runs of
uint64 words, so bit j of a vector lives in word j // 64 at position j % 64.
"""

import os

import numpy as np

_FLAG = os.environ.get("BENTCODES_NO_NUMBA", "").strip().lower()
_FORCE_NUMPY = _FLAG not in ("", "0", "false", "no")

try:
    if _FORCE_NUMPY:
        raise ImportError("numpy backend forced via BENTCODES_NO_NUMBA")
    from numba import njit, prange

    NUMBA_ACTIVE = True
except ImportError:  # pragma: no cover - exercised via subprocess in tests
    NUMBA_ACTIVE = False

    def njit(*args, **kwargs):  # signature-compatible no-op decorator
        if args and callable(args[0]):
            return args[0]

        def wrap(fn):
            return fn

        return wrap

    prange = range


def backend() -> str:
    """Name of the active backend: 'numba' or 'numpy'."""
    return "numba" if NUMBA_ACTIVE else "numpy"


# ---------------------------------------------------------------- packing

def pack_rows(bits: np.ndarray) -> np.ndarray:
    """Pack a (rows, ncols) 0/1 array into (rows, ceil(ncols/64)) uint64."""
    bits = np.ascontiguousarray(bits, dtype=np.uint8)
    rows, ncols = bits.shape
    nwords = max(1, -(-ncols // 64))
    padded = np.zeros((rows, nwords * 64), dtype=np.uint8)
    padded[:, :ncols] = bits
    by = np.packbits(padded, axis=1, bitorder="little").astype(np.uint64)
    by = by.reshape(rows, nwords, 8)
    shifts = (np.uint64(8) * np.arange(8, dtype=np.uint64))[None, None, :]
    return (by << shifts).sum(axis=2, dtype=np.uint64)


def unpack_rows(words: np.ndarray, ncols: int) -> np.ndarray:
    """Inverse of pack_rows; returns a (rows, ncols) uint8 array."""
    words = np.ascontiguousarray(words, dtype=np.uint64)
    rows, nwords = words.shape
    shifts = (np.uint64(8) * np.arange(8, dtype=np.uint64))[None, None, :]
    by = ((words[:, :, None] >> shifts) & np.uint64(0xFF)).astype(np.uint8)
    bits = np.unpackbits(by.reshape(rows, nwords * 8), axis=1, bitorder="little")
    return bits[:, :ncols]


def rows_to_ints(words: np.ndarray) -> list[int]:
    """Each packed row as one Python int (bit j of the row = bit j of the int)."""
    out = []
    for row in np.asarray(words, dtype=np.uint64):
        v = 0
        for w, word in enumerate(row):
            v |= int(word) << (64 * w)
        out.append(v)
    return out


def ints_to_rows(values, ncols: int) -> np.ndarray:
    nwords = max(1, -(-ncols // 64))
    mask = (1 << 64) - 1
    out = np.zeros((len(values), nwords), dtype=np.uint64)
    for i, v in enumerate(values):
        if v < 0 or v >> ncols:
            raise ValueError(f"value does not fit in {ncols} bits")
        for w in range(nwords):
            out[i, w] = (v >> (64 * w)) & mask
    return out


# ---------------------------------------------------------------- FWHT

@njit(cache=True)
def _fwht_nb(a):
    n = a.size
    h = 1
    while h < n:
        for base in range(0, n, 2 * h):
            for j in range(base, base + h):
                x = a[j]
                y = a[j + h]
                a[j] = x + y
                a[j + h] = x - y
        h *= 2


def _fwht_np(a):
    n = a.size
    h = 1
    while h < n:
        a = a.reshape(-1, 2 * h)
        left = a[:, :h].copy()
        a[:, :h] += a[:, h:]
        a[:, h:] = left - a[:, h:]
        a = a.reshape(-1)
        h *= 2


def fwht_inplace(a: np.ndarray) -> None:
    """In-place Walsh-Hadamard butterfly on an int64 vector of length 2**n.

    Valid only when index bits encode the function's input tuple; tables in
    field-element order must be re-indexed first.
    """
    if a.dtype != np.int64 or a.size & (a.size - 1):
        raise ValueError("need an int64 vector with power-of-two length")
    if NUMBA_ACTIVE:
        _fwht_nb(a)
    else:
        _fwht_np(a)


def fwht_batch(mat: np.ndarray) -> None:
    """Row-wise in-place butterfly on a (rows, 2**n) integer matrix.

    Vectorized across rows on both backends; wide enough batches make the
    pure-numpy butterfly competitive, so there is no numba variant.
    """
    rows, n = mat.shape
    if n & (n - 1):
        raise ValueError("row length must be a power of two")
    h = 1
    while h < n:
        m = mat.reshape(rows, -1, 2 * h)
        left = m[:, :, :h].copy()
        m[:, :, :h] += m[:, :, h:]
        m[:, :, h:] = left - m[:, :, h:]
        h *= 2


# ---------------------------------------------------------------- popcount

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)


@njit(cache=True, inline="always")
def _pc64(x):
    # SWAR popcount; all operands kept uint64 to dodge numba promotion rules.
    x = x - ((x >> np.uint64(1)) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return (x * _H01) >> np.uint64(56)


# ---------------------------------------------------------------- weight histograms

@njit(cache=True)
def _gray_hist_nb(basis, ncols):
    k, nwords = basis.shape
    hist = np.zeros(ncols + 1, dtype=np.int64)
    hist[0] = 1
    if k == 0:
        return hist
    roww = np.zeros(k, dtype=np.int64)
    for j in range(k):
        s = 0
        for w in range(nwords):
            s += int(_pc64(basis[j, w]))
        roww[j] = s
    cur = np.zeros(nwords, dtype=np.uint64)
    weight = 0
    total = np.int64(1) << k
    i = np.int64(1)
    while i < total:
        v = i
        j = 0
        while v & np.int64(1) == 0:
            v >>= 1
            j += 1
        inter = 0
        for w in range(nwords):
            inter += int(_pc64(basis[j, w] & cur[w]))
            cur[w] ^= basis[j, w]
        # flipping row j changes the weight by roww[j] - 2*|row & previous word|
        weight += roww[j] - 2 * inter
        hist[weight] += 1
        i += 1
    return hist


def _low_table(basis: np.ndarray, nbits: int) -> np.ndarray:
    """All XOR combinations of the first nbits rows, in numeric message order."""
    nwords = basis.shape[1]
    table = np.zeros((1 << nbits, nwords), dtype=np.uint64)
    for j in range(nbits):
        half = 1 << j
        table[half : 2 * half] = table[:half] ^ basis[j]
    return table


def _gray_hist_np(basis, ncols):
    k, nwords = basis.shape
    if k == 0:
        hist = np.zeros(ncols + 1, dtype=np.int64)
        hist[0] = 1
        return hist
    nlow = min(k, 16)
    table = _low_table(basis, nlow)
    hist = np.zeros(ncols + 1, dtype=np.int64)
    cur = np.zeros(nwords, dtype=np.uint64)
    for high in range(1 << (k - nlow)):
        if high:
            j = (high & -high).bit_length() - 1
            cur ^= basis[nlow + j]
        weights = np.bitwise_count(table ^ cur).sum(axis=1, dtype=np.int64)
        hist += np.bincount(weights, minlength=ncols + 1)
    return hist


def weight_histogram(basis: np.ndarray, ncols: int) -> np.ndarray:
    """Weight histogram of the span of packed basis rows; index = weight.

    Cost 2**k iterations (Gray-code walk on the numba backend, blocked table
    on the numpy one); the caller is responsible for budget guards.
    """
    basis = np.ascontiguousarray(basis, dtype=np.uint64)
    if NUMBA_ACTIVE:
        return _gray_hist_nb(basis, ncols)
    return _gray_hist_np(basis, ncols)


def words_of_weight(basis: np.ndarray, ncols: int, target: int) -> np.ndarray:
    """Packed span members of Hamming weight ``target``, in message order.

    Message order: combination m enumerates rows by the set bits of m, so
    output order is stable for a fixed basis.  Shared by both backends.
    """
    basis = np.ascontiguousarray(basis, dtype=np.uint64)
    k, nwords = basis.shape
    if k == 0:
        if target == 0:
            return np.zeros((1, nwords), dtype=np.uint64)
        return np.zeros((0, nwords), dtype=np.uint64)
    nlow = min(k, 16)
    table = _low_table(basis, nlow)
    chunks = []
    for high in range(1 << (k - nlow)):
        cur = np.zeros(nwords, dtype=np.uint64)
        h = high
        j = 0
        while h:
            if h & 1:
                cur ^= basis[nlow + j]
            h >>= 1
            j += 1
        block = table ^ cur
        weights = np.bitwise_count(block).sum(axis=1, dtype=np.int64)
        hit = block[weights == target]
        if hit.size:
            chunks.append(hit)
    if not chunks:
        return np.zeros((0, nwords), dtype=np.uint64)
    return np.concatenate(chunks, axis=0)


# ---------------------------------------------------------------- pairwise intersections

@njit(cache=True, parallel=True)
def _pair_hist_nb(blocks, cap):
    b, nwords = blocks.shape
    out = np.zeros((b, cap + 1), dtype=np.int64)
    for i in prange(b):
        for j in range(b):
            if j == i:
                continue
            s = 0
            for w in range(nwords):
                s += int(_pc64(blocks[i, w] & blocks[j, w]))
            out[i, s] += 1
    return out


def _pair_hist_np(blocks, cap):
    b, _ = blocks.shape
    out = np.zeros((b, cap + 1), dtype=np.int64)
    for i in range(b):
        sizes = np.bitwise_count(blocks & blocks[i]).sum(axis=1, dtype=np.int64)
        row = np.bincount(sizes, minlength=cap + 1)
        row[int(sizes[i])] -= 1  # drop the self pair
        out[i] = row
    return out


def pairwise_intersection_histogram(blocks: np.ndarray, cap: int) -> np.ndarray:
    """For each packed block row, histogram of |B_i & B_j| over all j != i."""
    blocks = np.ascontiguousarray(blocks, dtype=np.uint64)
    if NUMBA_ACTIVE:
        return _pair_hist_nb(blocks, cap)
    return _pair_hist_np(blocks, cap)


# ---------------------------------------------------------------- SDP triple scan

@njit(cache=True)
def _le_rows(table, i, row):
    nwords = table.shape[1]
    # lexicographic compare, most significant word last (little-endian packing)
    for w in range(nwords - 1, -1, -1):
        if table[i, w] != row[w]:
            return table[i, w] < row[w]
    return True


@njit(cache=True)
def _member_nb(table, row):
    lo = 0
    hi = table.shape[0]
    while lo < hi:
        mid = (lo + hi) // 2
        if _le_rows(table, mid, row):
            lo = mid + 1
        else:
            hi = mid
    i = lo - 1
    if i < 0:
        return False
    for w in range(table.shape[1]):
        if table[i, w] != row[w]:
            return False
    return True


@njit(cache=True)
def _sdp_scan_nb(blocks, table):
    b, nwords = blocks.shape
    tmp = np.zeros(nwords, dtype=np.uint64)
    for i in range(b):
        for j in range(i + 1, b):
            for l in range(j + 1, b):
                for w in range(nwords):
                    tmp[w] = blocks[i, w] ^ blocks[j, w] ^ blocks[l, w]
                if not _member_nb(table, tmp):
                    return i, j, l
    return -1, -1, -1


def _sorted_rows(rows: np.ndarray) -> np.ndarray:
    order = np.lexsort(rows.T)
    return np.ascontiguousarray(rows[order])


def _sdp_scan_py(blocks, allowed_ints):
    ints = rows_to_ints(blocks)
    ok = set(allowed_ints)
    b = len(ints)
    for i in range(b):
        for j in range(i + 1, b):
            x = ints[i] ^ ints[j]
            for l in range(j + 1, b):
                if x ^ ints[l] not in ok:
                    return i, j, l
    return -1, -1, -1


def sdp_triple_scan(blocks: np.ndarray, allowed: np.ndarray) -> tuple[int, int, int]:
    """First triple i<j<l whose blockwise XOR is not an ``allowed`` row.

    Returns (-1, -1, -1) when every triple lands in ``allowed``.  Used for the
    symmetric-difference property: allowed = blocks plus their complements.
    """
    blocks = np.ascontiguousarray(blocks, dtype=np.uint64)
    allowed = np.ascontiguousarray(allowed, dtype=np.uint64)
    if NUMBA_ACTIVE:
        return _sdp_scan_nb(blocks, _sorted_rows(allowed))
    return _sdp_scan_py(blocks, rows_to_ints(allowed))


def warmup() -> None:
    """Force JIT compilation of every numba kernel (no-op on numpy backend)."""
    if not NUMBA_ACTIVE:
        return
    v = np.zeros(2, dtype=np.int64)
    fwht_inplace(v)
    basis = np.array([[3]], dtype=np.uint64)
    weight_histogram(basis, 2)
    blocks = np.array([[3], [5], [6]], dtype=np.uint64)
    pairwise_intersection_histogram(blocks, 3)
    sdp_triple_scan(blocks, blocks)
