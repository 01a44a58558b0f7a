#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library code path they are used to check.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using Block = std::vector<int>;
using Partition = std::vector<Block>;

/// All partitions of {1..n}, built by inserting element n into each block of
/// every partition of {1..n-1} or into a new block.
inline std::vector<Partition> brute_force_partitions(int n) {
  std::vector<Partition> current{Partition{}};
  for (int e = 1; e <= n; ++e) {
    std::vector<Partition> next;
    for (const auto& p : current) {
      for (std::size_t b = 0; b < p.size(); ++b) {
        Partition q = p;
        q[b].push_back(e);
        next.push_back(std::move(q));
      }
      Partition q = p;
      q.push_back({e});
      next.push_back(std::move(q));
    }
    current = std::move(next);
  }
  return current;
}

/// Number of partitions of {1..n} with exactly k blocks, by brute force.
inline long count_partitions_with_blocks(int n, int k) {
  long count = 0;
  for (const auto& p : brute_force_partitions(n)) count += static_cast<int>(p.size()) == k;
  return count;
}

/// Integer partition count p(n) by the "parts at most k" table.
inline long integer_partitions(int n) {
  std::vector<long> ways(n + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= n; ++part) {
    for (int total = part; total <= n; ++total) ways[total] += ways[total - part];
  }
  return ways[n];
}

/// Sorted block-size multiset of a partition.
inline std::vector<std::uint32_t> block_sizes(const Partition& p) {
  std::vector<std::uint32_t> s;
  for (const auto& b : p) s.push_back(static_cast<std::uint32_t>(b.size()));
  std::sort(s.begin(), s.end());
  return s;
}

// Normal forms as (r, s) -> coefficient for (ad)^r a^s.
using Form = std::map<std::pair<unsigned, unsigned>, mpq_class>;

inline mpz_class binom(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline mpz_class fact(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// Wick's product of normal-ordered monomials:
///   (ad^r a^s)(ad^t a^u) = sum_k k! C(s,k) C(t,k) ad^{r+t-k} a^{s+u-k}.
inline Form wick_product(const Form& x, const Form& y) {
  Form out;
  for (const auto& [ka, ca] : x) {
    for (const auto& [kb, cb] : y) {
      const auto [r, s] = ka;
      const auto [t, u] = kb;
      for (unsigned k = 0; k <= std::min(s, t); ++k) {
        out[{r + t - k, s + u - k}] += ca * cb * mpq_class(fact(k) * binom(s, k) * binom(t, k));
      }
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// Normal form of a word given as a string of 'a' / 'd' (d = creator).
inline Form wick_order(const std::string& word) {
  Form acc{{{0, 0}, 1}};
  for (char c : word) acc = wick_product(acc, Form{{c == 'd' ? std::pair{1u, 0u} : std::pair{0u, 1u}, 1}});
  return acc;
}

/// Action on the unnormalized Fock basis |n) = (ad)^n |0>:
///   ad |n) = |n+1),  a |n) = n |n-1).
/// Both are integer matrices, so the computation is exact; matrix elements in
/// the orthonormal basis differ only by the common factor sqrt(m!/m'!).
class FockSpace {
 public:
  explicit FockSpace(unsigned dim) : dim_(dim) {}

  using Vec = std::vector<mpq_class>;

  Vec basis(unsigned n) const {
    Vec v(dim_);
    v.at(n) = 1;
    return v;
  }

  Vec apply_letter(char c, const Vec& v) const {
    Vec out(dim_);
    for (unsigned n = 0; n < dim_; ++n) {
      if (v[n] == 0) continue;
      if (c == 'd') {
        if (n + 1 < dim_) out[n + 1] += v[n];
      } else if (n > 0) {
        out[n - 1] += v[n] * n;
      }
    }
    return out;
  }

  /// word acts right-to-left, as an operator product.
  Vec apply_word(const std::string& word, Vec v) const {
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply_letter(*it, v);
    return v;
  }

  Vec apply_form(const Form& form, const Vec& v) const {
    Vec out(dim_);
    for (const auto& [key, c] : form) {
      std::string w(key.first, 'd');
      w.append(key.second, 'a');
      const Vec part = apply_word(w, v);
      for (unsigned n = 0; n < dim_; ++n) out[n] += c * part[n];
    }
    return out;
  }

 private:
  unsigned dim_;
};

inline std::string random_word(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::bernoulli_distribution coin(0.5);
  std::string w(len(rng), 'a');
  for (auto& c : w) c = coin(rng) ? 'd' : 'a';
  return w;
}

}  // namespace oracle
