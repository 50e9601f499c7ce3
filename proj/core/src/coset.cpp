#include "cpg/coset.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cpg {

namespace {

GroupWord reduce_cyclically(GroupWord w) {
  GroupWord stack;
  for (int letter : w) {
    if (!stack.empty() && stack.back() == -letter) {
      stack.pop_back();
    } else {
      stack.push_back(letter);
    }
  }
  std::size_t begin = 0;
  std::size_t end = stack.size();
  while (end - begin >= 2 && stack[begin] == -stack[end - 1]) {
    ++begin;
    --end;
  }
  return GroupWord(stack.begin() + static_cast<long>(begin), stack.begin() + static_cast<long>(end));
}

GroupWord inverse_word(const GroupWord& w) {
  GroupWord out(w.rbegin(), w.rend());
  for (int& letter : out) letter = -letter;
  return out;
}

}  // namespace

FinitePresentation::FinitePresentation(int generators, std::vector<GroupWord> relators) : generators_(generators) {
  if (generators < 0) throw std::invalid_argument("negative generator count");
  for (GroupWord& r : relators) {
    for (int letter : r) {
      if (letter == 0 || std::abs(letter) > generators) throw std::invalid_argument("relator letter out of range");
    }
    GroupWord reduced = reduce_cyclically(std::move(r));
    if (!reduced.empty()) relators_.push_back(std::move(reduced));
  }
}

std::string FinitePresentation::to_string() const {
  std::ostringstream out;
  out << "<";
  for (int g = 0; g < generators_; ++g) out << (g ? "," : "") << "x" << g;
  out << " | ";
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    out << (i ? ", " : "");
    for (std::size_t j = 0; j < relators_[i].size(); ++j) {
      int letter = relators_[i][j];
      out << (j ? " " : "") << "x" << (std::abs(letter) - 1) << (letter < 0 ? "^-1" : "");
    }
  }
  out << ">";
  return out.str();
}

FinitePresentation cyclic_presentation(long n, long k, long l) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  auto gen = [n](long i) { return static_cast<int>(((i % n) + n) % n) + 1; };
  std::vector<GroupWord> relators;
  for (long i = 0; i < n; ++i) relators.push_back({gen(i), gen(i + k), gen(i + l)});
  return FinitePresentation(static_cast<int>(n), std::move(relators));
}

FinitePresentation extension_presentation(long m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  auto t_power = [](long e) {
    GroupWord w(static_cast<std::size_t>(std::abs(e)), e < 0 ? -2 : 2);
    return w;
  };
  GroupWord torsion = t_power(2 * m);
  GroupWord main = {1, 1};
  for (int letter : t_power(m - 3)) main.push_back(letter);
  main.push_back(1);
  for (int letter : t_power(m)) main.push_back(letter);
  return FinitePresentation(2, {torsion, main});
}

namespace {

class Enumerator {
 public:
  Enumerator(const FinitePresentation& p, std::size_t cap)
      : columns_(static_cast<std::size_t>(2 * p.generators())), cap_(cap) {
    for (const GroupWord& r : p.relators()) relators_.push_back(to_columns(r));
    conjugates_.resize(columns_);
    for (const GroupWord& r : p.relators()) {
      for (const GroupWord& w : {r, inverse_word(r)}) {
        std::vector<std::size_t> cols = to_columns(w);
        for (std::size_t s = 0; s < cols.size(); ++s) {
          std::vector<std::size_t> rotated(cols.begin() + static_cast<long>(s), cols.end());
          rotated.insert(rotated.end(), cols.begin(), cols.begin() + static_cast<long>(s));
          conjugates_[rotated.front()].push_back(std::move(rotated));
        }
      }
    }
    table_.reserve(cap * std::max<std::size_t>(columns_, 1));
    new_row();
  }

  EnumerationResult run(Strategy strategy) {
    EnumerationResult result;
    result.cap = cap_;
    bool ok = strategy == Strategy::HLT ? run_hlt() : run_felsch();
    while (ok && !consistent()) {
      // Repair pass; only reached if a deduction was lost.
      sweep();
      ok = strategy == Strategy::HLT ? run_hlt() : run_felsch();
    }
    if (ok) result.order = live_;
    result.cosets_defined = defined_;
    result.collapses = collapses_;
    result.lookaheads = lookaheads_;
    return result;
  }

 private:
  static constexpr long kUndefined = -1;

  std::vector<std::size_t> to_columns(const GroupWord& w) const {
    std::vector<std::size_t> cols;
    for (int letter : w) {
      std::size_t g = static_cast<std::size_t>(std::abs(letter) - 1);
      cols.push_back(2 * g + (letter < 0 ? 1 : 0));
    }
    return cols;
  }

  long& entry(std::size_t coset, std::size_t col) { return table_[coset * columns_ + col]; }
  bool live(std::size_t c) const { return parent_[c] == c; }

  void new_row() {
    table_.insert(table_.end(), columns_, kUndefined);
    parent_.push_back(parent_.size());
    ++live_;
  }

  bool define(std::size_t alpha, std::size_t col) {
    if (parent_.size() >= cap_) return false;
    std::size_t beta = parent_.size();
    new_row();
    entry(alpha, col) = static_cast<long>(beta);
    entry(beta, col ^ 1) = static_cast<long>(alpha);
    ++defined_;
    deductions_.emplace_back(alpha, col);
    return true;
  }

  std::size_t rep(std::size_t c) {
    std::size_t root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      std::size_t next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  void merge(std::size_t a, std::size_t b, std::vector<std::size_t>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue.push_back(b);
    ++collapses_;
    --live_;
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::vector<std::size_t> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const std::size_t gamma = queue[i];
      for (std::size_t x = 0; x < columns_; ++x) {
        long d = entry(gamma, x);
        if (d == kUndefined) continue;
        std::size_t delta = static_cast<std::size_t>(d);
        entry(delta, x ^ 1) = kUndefined;
        std::size_t mu = rep(gamma);
        std::size_t nu = rep(delta);
        if (entry(mu, x) != kUndefined) {
          merge(nu, static_cast<std::size_t>(entry(mu, x)), queue);
        } else if (entry(nu, x ^ 1) != kUndefined) {
          merge(mu, static_cast<std::size_t>(entry(nu, x ^ 1)), queue);
        } else {
          entry(mu, x) = static_cast<long>(nu);
          entry(nu, x ^ 1) = static_cast<long>(mu);
          deductions_.emplace_back(mu, x);
        }
      }
    }
  }

  // Traces w from alpha in both directions. With fill, undefined gaps get new cosets.
  // Returns false only when a definition would exceed the cap.
  bool scan(std::size_t alpha, const std::vector<std::size_t>& w, bool fill) {
    if (w.empty()) return true;
    std::size_t f = alpha;
    std::size_t b = alpha;
    long i = 0;
    long j = static_cast<long>(w.size()) - 1;
    auto at = [&](long index) { return w[static_cast<std::size_t>(index)]; };
    while (true) {
      while (i <= j && entry(f, at(i)) != kUndefined) {
        f = static_cast<std::size_t>(entry(f, at(i)));
        ++i;
      }
      if (i > j) {
        if (f != alpha) coincidence(f, alpha);
        return true;
      }
      while (j >= i && entry(b, at(j) ^ 1) != kUndefined) {
        b = static_cast<std::size_t>(entry(b, at(j) ^ 1));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        entry(f, at(i)) = static_cast<long>(b);
        entry(b, at(i) ^ 1) = static_cast<long>(f);
        deductions_.emplace_back(f, at(i));
        return true;
      }
      if (!fill) return true;
      if (!define(f, at(i))) return false;
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [beta, y] = deductions_.back();
      deductions_.pop_back();
      if (!live(beta)) continue;
      for (const auto& w : conjugates_[y]) {
        scan(beta, w, false);
        if (!live(beta)) break;
      }
      if (!live(beta) || entry(beta, y) == kUndefined) continue;
      std::size_t gamma = static_cast<std::size_t>(entry(beta, y));
      for (const auto& w : conjugates_[y ^ 1]) {
        if (!live(gamma)) break;
        scan(gamma, w, false);
      }
    }
  }

  // Scans every relator at every live coset without defining.
  void sweep() {
    ++lookaheads_;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      for (const auto& w : relators_) {
        if (!live(c)) break;
        scan(c, w, false);
      }
    }
    deductions_.clear();
  }

  // Renumbers live cosets contiguously; returns the new index of the first live coset >= alpha.
  std::size_t compact(std::size_t alpha) {
    std::vector<long> index(parent_.size(), kUndefined);
    std::size_t next = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (live(c)) index[c] = static_cast<long>(next++);
    }
    std::vector<long> table(next * columns_, kUndefined);
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!live(c)) continue;
      for (std::size_t x = 0; x < columns_; ++x) {
        long d = entry(c, x);
        if (d != kUndefined) d = index[rep(static_cast<std::size_t>(d))];
        table[static_cast<std::size_t>(index[c]) * columns_ + x] = d;
      }
    }
    std::size_t new_alpha = next;
    for (std::size_t c = alpha; c < parent_.size(); ++c) {
      if (live(c)) {
        new_alpha = static_cast<std::size_t>(index[c]);
        break;
      }
    }
    table_ = std::move(table);
    parent_.resize(next);
    for (std::size_t c = 0; c < next; ++c) parent_[c] = c;
    live_ = next;
    deductions_.clear();
    return new_alpha;
  }

  bool hlt_coset(std::size_t alpha) {
    for (const auto& w : relators_) {
      if (!scan(alpha, w, true)) return false;
      if (!live(alpha)) return true;
    }
    for (std::size_t x = 0; x < columns_; ++x) {
      if (entry(alpha, x) == kUndefined && !define(alpha, x)) return false;
    }
    return true;
  }

  bool run_hlt() {
    std::size_t alpha = 0;
    while (alpha < parent_.size()) {
      if (live(alpha) && !hlt_coset(alpha)) {
        sweep();
        alpha = compact(alpha);
        if (parent_.size() >= cap_) return false;
        continue;
      }
      deductions_.clear();
      ++alpha;
    }
    return true;
  }

  bool run_felsch() {
    process_deductions();
    for (std::size_t alpha = 0; alpha < parent_.size(); ++alpha) {
      for (std::size_t x = 0; x < columns_; ++x) {
        if (!live(alpha)) break;
        if (entry(alpha, x) != kUndefined) continue;
        if (!define(alpha, x)) return false;
        process_deductions();
      }
    }
    return true;
  }

  bool consistent() {
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!live(c)) continue;
      for (std::size_t x = 0; x < columns_; ++x) {
        long d = entry(c, x);
        if (d == kUndefined || !live(static_cast<std::size_t>(d))) return false;
        if (entry(static_cast<std::size_t>(d), x ^ 1) != static_cast<long>(c)) return false;
      }
      for (const auto& w : relators_) {
        std::size_t f = c;
        for (std::size_t col : w) f = static_cast<std::size_t>(entry(f, col));
        if (f != c) return false;
      }
    }
    return true;
  }

  std::size_t columns_;
  std::size_t cap_;
  std::vector<std::vector<std::size_t>> relators_;
  std::vector<std::vector<std::vector<std::size_t>>> conjugates_;
  std::vector<long> table_;
  std::vector<std::size_t> parent_;
  std::vector<std::pair<std::size_t, std::size_t>> deductions_;
  std::size_t live_ = 0;
  std::size_t defined_ = 0;
  std::size_t collapses_ = 0;
  std::size_t lookaheads_ = 0;
};

}  // namespace

EnumerationResult todd_coxeter(const FinitePresentation& p, std::size_t cap, Strategy strategy) {
  if (cap < 1) throw std::invalid_argument("cap must be at least 1");
  if (p.generators() == 0) {
    EnumerationResult r;
    r.cap = cap;
    r.order = 1;
    return r;
  }
  Enumerator e(p, cap);
  return e.run(strategy);
}

}  // namespace cpg
