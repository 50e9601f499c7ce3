#include "oracles.hpp"

#include "cpg/rewrite.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>

namespace cpg::oracle {

namespace {

struct Sym {
  Corner corner;
  int sign;
  long p;
  long q;
};

class RawSearch {
 public:
  RawSearch(const StarGraph& graph, std::size_t max_degree, bool exclude_repeated)
      : graph_(graph), max_degree_(max_degree), exclude_repeated_(exclude_repeated) {
    std::set<Corner> seen;
    for (const StarEdge& e : graph.edges()) seen.insert(e.label);
    for (Corner c : seen) {
      const TExp x = corner_exponent(c);
      const long p = x.coeff_m().get_si();
      const long q = x.constant_term().get_si();
      alphabet_.push_back({c, 1, p, q});
      if (c != Corner::Lambda && c != Corner::Mu) alphabet_.push_back({c, -1, -p, -q});
    }
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
      for (std::size_t j = 0; j < alphabet_.size(); ++j) {
        if (inverse_of(alphabet_[i], alphabet_[j])) inverse_[i] = j;
      }
    }
  }

  std::set<std::vector<std::size_t>> run() {
    std::vector<std::pair<std::string, std::string>> starts;
    for (const std::string& n : graph_.nodes()) starts.push_back({n, n});
    grow(starts);
    return found_;
  }

 private:
  static bool inverse_of(const Sym& a, const Sym& b) {
    if (a.corner == b.corner) return a.sign == -b.sign;
    return (a.corner == Corner::Lambda && b.corner == Corner::Mu) || (a.corner == Corner::Mu && b.corner == Corner::Lambda);
  }

  // Where the letter leads from `node`, if anywhere.
  std::optional<std::string> step(const Sym& s, const std::string& node) const {
    for (const StarEdge& e : graph_.edges()) {
      if (e.label != s.corner) continue;
      if (s.sign > 0 && e.from == node) return e.to;
      if (s.sign < 0 && !e.directed && e.to == node) return e.from;
    }
    return std::nullopt;
  }

  void grow(const std::vector<std::pair<std::string, std::string>>& walks) {
    if (!seq_.empty()) consider(walks);
    if (seq_.size() == max_degree_) return;
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
      std::vector<std::pair<std::string, std::string>> next;
      for (const auto& [start, at] : walks) {
        if (auto to = step(alphabet_[i], at)) next.push_back({start, *to});
      }
      if (next.empty()) continue;
      seq_.push_back(i);
      grow(next);
      seq_.pop_back();
    }
  }

  bool admissible(long p, long q) const {
    const MSet s = solve_m(p, q);
    return s.all || !s.values.empty();
  }

  void consider(const std::vector<std::pair<std::string, std::string>>& walks) {
    const bool closed = std::any_of(walks.begin(), walks.end(), [](const auto& w) { return w.first == w.second; });
    if (!closed) return;
    const std::size_t n = seq_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (inverse_.at(seq_[i]) == seq_[(i + 1) % n]) return;
    }
    long p = 0, q = 0;
    for (std::size_t i : seq_) {
      p += alphabet_[i].p;
      q += alphabet_[i].q;
    }
    if (!admissible(p, q)) return;
    if (exclude_repeated_) {
      for (std::size_t period = 1; period < n; ++period) {
        if (n % period != 0) continue;
        bool periodic = true;
        for (std::size_t i = period; i < n; ++i) periodic = periodic && seq_[i] == seq_[i - period];
        if (!periodic) continue;
        long up = 0, uq = 0;
        for (std::size_t i = 0; i < period; ++i) {
          up += alphabet_[seq_[i]].p;
          uq += alphabet_[seq_[i]].q;
        }
        if (admissible(up, uq)) return;
      }
    }
    found_.insert(min_rotation());
  }

  std::vector<std::size_t> min_rotation() const {
    const std::size_t n = seq_.size();
    std::vector<std::size_t> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[i] = inverse_.at(seq_[n - 1 - i]);
    std::vector<std::size_t> best = seq_;
    const std::vector<std::size_t>& backward = inv;
    for (const auto* v : {&seq_, &backward}) {
      for (std::size_t r = 0; r < n; ++r) {
        std::vector<std::size_t> cand(v->begin() + static_cast<long>(r), v->end());
        cand.insert(cand.end(), v->begin(), v->begin() + static_cast<long>(r));
        best = std::min(best, cand);
      }
    }
    return best;
  }

 public:
  Word word(const std::vector<std::size_t>& s) const {
    std::vector<Letter> letters;
    for (std::size_t i : s) letters.push_back(corner(alphabet_[i].corner, alphabet_[i].sign));
    return Word(letters);
  }

 private:
  const StarGraph& graph_;
  std::size_t max_degree_;
  bool exclude_repeated_;
  std::vector<Sym> alphabet_;
  std::map<std::size_t, std::size_t> inverse_;
  std::vector<std::size_t> seq_;
  std::set<std::vector<std::size_t>> found_;
};

}  // namespace

std::set<CyclicWord> labels(const StarGraph& graph, std::size_t max_degree, bool exclude_repeated) {
  RawSearch search(graph, max_degree, exclude_repeated);
  std::set<CyclicWord> out;
  for (const auto& s : search.run()) out.insert(cpg::canonical_cyclic(search.word(s)));
  return out;
}

Word canonical_cyclic(const Word& w) {
  std::vector<Word> candidates;
  const Word inv = w.inverse();
  for (std::size_t r = 0; r < w.size(); ++r) {
    candidates.push_back(w.rotated(r));
    candidates.push_back(inv.rotated(r));
  }
  if (candidates.empty()) return w;
  return *std::min_element(candidates.begin(), candidates.end(),
                           [](const Word& a, const Word& b) { return compare(a, b) < 0; });
}

MSet solve_m(long coeff_m, long constant) {
  MSet out;
  if (constant == 0) {
    out.all = coeff_m % 2 == 0;
    return out;
  }
  for (long m = 1; m <= std::labs(constant); ++m) {
    if ((coeff_m * m + constant) % (2 * m) == 0) out.raw.insert(m);
  }
  for (long m : out.raw) {
    if (!excluded_m(m)) out.values.insert(m);
  }
  return out;
}

namespace {

// Unimodular [[s, u], [-y, x]] sending (p, q) to (g, 0). Plain subtraction when p | q.
std::array<Integer, 4> bezout(const Integer& p, const Integer& q) {
  if (mpz_divisible_p(q.get_mpz_t(), p.get_mpz_t())) return {1, 0, 1, q / p};
  Integer g, s, u;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  return {s, u, p / g, q / g};
}

}  // namespace

AbelianInvariants smith_invariants(const IntMatrix& input) {
  const std::size_t rows = input.rows();
  const std::size_t cols = input.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = input(i, j);
  }

  const std::size_t limit = std::min(rows, cols);
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < limit; ++t) {
    std::optional<std::pair<std::size_t, std::size_t>> nz;
    for (std::size_t i = t; i < rows && !nz; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (a[i][j] != 0) {
          nz = {{i, j}};
          break;
        }
      }
    }
    if (!nz) break;
    std::swap(a[t], a[nz->first]);
    for (auto& row : a) std::swap(row[t], row[nz->second]);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const auto [s, u, x, y] = bezout(a[t][t], a[i][t]);
        for (std::size_t j = t; j < cols; ++j) {
          const Integer top = s * a[t][j] + u * a[i][j];
          const Integer bottom = -y * a[t][j] + x * a[i][j];
          a[t][j] = top;
          a[i][j] = bottom;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        dirty = true;
        const auto [s, u, x, y] = bezout(a[t][t], a[t][j]);
        for (std::size_t i = t; i < rows; ++i) {
          const Integer left = s * a[i][t] + u * a[i][j];
          const Integer right = -y * a[i][t] + x * a[i][j];
          a[i][t] = left;
          a[i][j] = right;
        }
      }
      if (dirty) {
        dirty = false;
        for (std::size_t i = t + 1; i < rows; ++i) dirty = dirty || a[i][t] != 0;
      }
    }
    diag.push_back(abs(a[t][t]));
  }

  for (std::size_t i = 0; i < diag.size(); ++i) {
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[i] == 0 && diag[j] == 0) continue;
      Integer g, l;
      mpz_gcd(g.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
      diag[i] = g;
      diag[j] = l;
    }
  }

  AbelianInvariants inv;
  std::size_t nonzero = 0;
  for (const Integer& d : diag) {
    if (d == 0) continue;
    ++nonzero;
    if (d != 1) inv.torsion.push_back(d);
  }
  std::sort(inv.torsion.begin(), inv.torsion.end());
  inv.free_rank = static_cast<long>(cols - nonzero);
  return inv;
}

GroupWord extension_word(const Word& w, long m) {
  const Word reduced = concrete(substitute_corners(w), torsion_for(m));
  GroupWord out;
  for (const Letter& letter : reduced.letters()) {
    if (const auto* g = std::get_if<Gen>(&letter)) {
      if (g->name != 'x') throw std::invalid_argument("only x and t are supported");
      out.push_back(g->sign > 0 ? 1 : -1);
    } else if (const auto* t = std::get_if<TPower>(&letter)) {
      const long e = t->exp.at(m).get_si();
      for (long i = 0; i < std::labs(e); ++i) out.push_back(e > 0 ? 2 : -2);
    } else {
      throw std::invalid_argument("corner letter left after substitution");
    }
  }
  return out;
}

bool equal_in_extension(const Word& a, const Word& b, long m) {
  const FinitePresentation base = extension_presentation(m);
  std::vector<GroupWord> relators = base.relators();
  GroupWord quotient = extension_word(a, m);
  GroupWord inv = extension_word(b, m);
  std::reverse(inv.begin(), inv.end());
  for (int& letter : inv) letter = -letter;
  quotient.insert(quotient.end(), inv.begin(), inv.end());
  relators.push_back(quotient);
  const auto whole = todd_coxeter(base, 20000).order;
  const auto part = todd_coxeter(FinitePresentation(2, relators), 20000).order;
  if (!whole || !part) throw std::runtime_error("enumeration did not close");
  return *whole == *part;
}

}  // namespace cpg::oracle
