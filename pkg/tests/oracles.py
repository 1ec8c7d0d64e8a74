"""Slow reference computations that share no code with the fast paths."""

from itertools import combinations, product


def expanded_weights(field, rows):
    """Nonzero weights of every codeword of the row space, by explicit expansion."""
    k, n = len(rows), len(rows[0])
    out = set()
    for u in product(range(field.order), repeat=k):
        word = [0] * n
        for a, row in zip(u, rows):
            if a:
                word = [field.add(w, field.mul(a, x)) for w, x in zip(word, row)]
        w = sum(1 for x in word if x)
        if w:
            out.add(w)
    return out


def span_size(field, rows):
    k, n = len(rows), len(rows[0])
    words = set()
    for u in product(range(field.order), repeat=k):
        word = [0] * n
        for a, row in zip(u, rows):
            word = [field.add(w, field.mul(a, x)) for w, x in zip(word, row)]
        words.add(tuple(word))
    return len(words)


def brute_L(field, n, k):
    """Max weight count over all k x n matrices of full rank."""
    q = field.order
    best = 0
    for entries in product(range(q), repeat=n * k):
        rows = [list(entries[i * n:(i + 1) * n]) for i in range(k)]
        if span_size(field, rows) != q**k:
            continue
        best = max(best, len(expanded_weights(field, rows)))
    return best


def brute_N(n, M, q):
    """Max distinct distances over all M-subsets of [0,q)^n."""
    words = list(product(range(q), repeat=n))
    best = 0
    for code in combinations(words, M):
        d = {sum(a != b for a, b in zip(x, y)) for x, y in combinations(code, 2)}
        best = max(best, len(d))
    return best


def difference_sets_bruteforce(v, size):
    for rest in combinations(range(1, v), size - 1):
        s = (0,) + rest
        diffs = sorted((a - b) % v for a in s for b in s if a != b)
        if diffs == list(range(1, v)):
            yield s
