#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cpg {

// Letters are +-(g + 1) for generator index g.
using GroupWord = std::vector<int>;

class FinitePresentation {
 public:
  // Relators are freely and cyclically reduced on construction; empty ones are dropped.
  FinitePresentation(int generators, std::vector<GroupWord> relators);

  int generators() const { return generators_; }
  const std::vector<GroupWord>& relators() const { return relators_; }
  std::string to_string() const;

 private:
  int generators_ = 0;
  std::vector<GroupWord> relators_;
};

// n generators, relators x_i x_{i+k} x_{i+l}.
FinitePresentation cyclic_presentation(long n, long k, long l);
// <x, t | t^{2m}, x^2 t^{m-3} x t^m>, generators x = 0, t = 1.
FinitePresentation extension_presentation(long m);

enum class Strategy { HLT, Felsch };

struct EnumerationResult {
  // Set when the table closed.
  std::optional<std::size_t> order;
  std::size_t cap = 0;
  std::size_t cosets_defined = 0;
  std::size_t collapses = 0;
  std::size_t lookaheads = 0;
  bool closed() const { return order.has_value(); }
};

// Cosets of the trivial subgroup, never holding more than `cap` cosets at once.
EnumerationResult todd_coxeter(const FinitePresentation& p, std::size_t cap, Strategy strategy = Strategy::HLT);

}  // namespace cpg
