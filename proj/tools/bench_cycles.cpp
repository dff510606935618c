// Benchmark: cycle extraction by direct traversal (the library path) versus
// union-find over pairing edges.  Both must produce identical cycle length
// multisets; wall times are reported per method.  Union-find lives here, not
// in the library, because traversal is the supported extraction path.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "cyclation/pairing.hpp"
#include "cyclation/rng.hpp"
#include "cyclation/sample.hpp"

namespace {

using namespace cyclation;

struct UnionFind {
  std::vector<uint32_t> parent;
  std::vector<uint32_t> size;

  explicit UnionFind(uint32_t n) : parent(n), size(n, 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  uint32_t find(uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];  // path halving
      x = parent[x];
    }
    return x;
  }

  void unite(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
};

// Each interval is a node; every pairing edge {e, e'} links intervals e/2
// and e'/2.  The resulting multigraph is 2-regular, so component sizes are
// exactly the cycle lengths.
std::vector<unsigned> cycle_lengths_union_find(const Pairing& p) {
  const uint32_t n = p.n();
  UnionFind uf(n);
  for (uint32_t e = 0; e < 2 * n; ++e) {
    if (e < p.partner[e]) uf.unite(e / 2, p.partner[e] / 2);
  }
  std::vector<unsigned> lengths;
  for (uint32_t m = 0; m < n; ++m) {
    if (uf.find(m) == m) lengths.push_back(uf.size[m]);
  }
  return lengths;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  unsigned n = 100000;
  uint64_t reps = 20;
  uint64_t seed = 1;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--n" && i + 1 < argc) {
      n = static_cast<unsigned>(std::stoul(argv[++i]));
    } else if (arg == "--reps" && i + 1 < argc) {
      reps = std::stoull(argv[++i]);
    } else if (arg == "--seed" && i + 1 < argc) {
      seed = std::stoull(argv[++i]);
    } else {
      std::cerr << "usage: bench_cycles [--n N] [--reps R] [--seed S]\n";
      return 4;
    }
  }
  if (n < 1 || reps < 1) {
    std::cerr << "bench_cycles: n and reps must be >= 1\n";
    return 4;
  }

  Rng rng(seed, 0);
  std::vector<Pairing> draws;
  draws.reserve(reps);
  for (uint64_t r = 0; r < reps; ++r) draws.push_back(sample_pairing(n, rng));

  uint64_t traversal_cycles = 0;
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::vector<unsigned>> traversal;
  traversal.reserve(reps);
  for (const Pairing& p : draws) {
    traversal.push_back(cycle_lengths(p));
    traversal_cycles += traversal.back().size();
  }
  double traversal_ms = ms_since(t0);

  uint64_t uf_cycles = 0;
  t0 = std::chrono::steady_clock::now();
  std::vector<std::vector<unsigned>> unionfind;
  unionfind.reserve(reps);
  for (const Pairing& p : draws) {
    unionfind.push_back(cycle_lengths_union_find(p));
    uf_cycles += unionfind.back().size();
  }
  double unionfind_ms = ms_since(t0);

  for (uint64_t r = 0; r < reps; ++r) {
    std::vector<unsigned> a = traversal[r], b = unionfind[r];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) {
      std::cerr << "bench_cycles: methods disagree on draw " << r << "\n";
      return 2;
    }
  }

  std::cout << "method,n,reps,cycles_total,ms_total,ms_per_draw\n";
  std::cout << "traversal," << n << "," << reps << "," << traversal_cycles << ","
            << traversal_ms << "," << traversal_ms / static_cast<double>(reps) << "\n";
  std::cout << "union-find," << n << "," << reps << "," << uf_cycles << ","
            << unionfind_ms << "," << unionfind_ms / static_cast<double>(reps) << "\n";
  return 0;
}
