"""Dense-grid maxima of H(8.4, .) and H1(6.4, .).

H(a, x) = sin x * H1(a, x) and H1(a, x) = int_0^inf t^a / sinh t * x / (x^2 + t^2) dt.
The t-integral uses composite Gauss-Legendre (100 panels x 24 nodes on
[0, 100]); the x-grid has 10^6 points.
"""
import numpy as np


def h1_on_grid(alpha, xs, chunk=4000):
    nodes, weights = np.polynomial.legendre.leggauss(24)
    edges = np.linspace(0.0, 100.0, 101)
    t = np.concatenate([0.5 * (b - a) * nodes + 0.5 * (a + b) for a, b in zip(edges[:-1], edges[1:])])
    w = np.concatenate([0.5 * (b - a) * weights for a, b in zip(edges[:-1], edges[1:])])
    base = w * np.exp(alpha * np.log(t) - t) * 2.0 / (1.0 - np.exp(-2.0 * t))
    out = np.empty_like(xs)
    for i in range(0, xs.size, chunk):
        x = xs[i : i + chunk, None]
        out[i : i + chunk] = (base * x / (x * x + t * t)).sum(axis=1)
    return out


def main():
    xs = np.linspace(0.0, 60.0, 1_000_001)[1:]
    h = np.abs(np.sin(xs) * h1_on_grid(8.4, xs))
    i = int(np.argmax(h))
    print(f"H_8.4_argmax = {xs[i]!r}")
    print(f"H_8.4_max = {h[i]!r}")

    xs = np.linspace(0.0, 6.4 + 20 * np.pi, 1_000_001)[1:]
    h1 = h1_on_grid(6.4, xs)
    i = int(np.argmax(h1))
    print(f"H1_6.4_argmax = {xs[i]!r}")
    print(f"H1_6.4_max = {h1[i]!r}")


if __name__ == "__main__":
    main()
