#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rotsys/crossings.hpp"

namespace rotsys {

using Lit = int;

struct VarBlock {
  std::string name;
  int first;
  int last;
};

// Dense variable numbering. For an instance over N elements the blocks are
// X (N(N-1)^2), Y over sorted triples (N C(N-1,3)), C (3 C(N,4)) and D
// (6 C(N,4)), followed by named auxiliary blocks.
class VarMap {
 public:
  explicit VarMap(int elements = 0);

  int elements() const { return n_; }
  int num_vars() const { return next_ - 1; }

  // "pi_a(i) = b", positions 0-based.
  int x(Vertex a, int i, Vertex b) const;
  // b < c < d, all distinct from a.
  int y_sorted(Vertex a, Vertex b, Vertex c, Vertex d) const;
  // "b, c, d counterclockwise around a" for any order of b, c, d.
  Lit y(Vertex a, Vertex b, Vertex c, Vertex d) const;

  int c(Edge e, Edge f) const;
  // q sorted ascending.
  int c_quad(const Vertex q[4], Pairing p) const;
  int d_quad(const Vertex q[4], Pairing p, int direction) const;

  int fresh() { return next_++; }
  // Reserves count consecutive ids under a name; returns the first.
  int fresh_block(std::string name, int count);

  // Names the ids allocated with fresh() since `first`.
  void mark_block(std::string name, int first) {
    if (first < next_) blocks_.push_back({std::move(name), first, next_ - 1});
  }

  const std::vector<VarBlock>& blocks() const { return blocks_; }

 private:
  int quad_rank(const Vertex q[4]) const;

  int n_;
  int y_base_ = 0, c_base_ = 0, d_base_ = 0;
  int next_ = 1;
  std::vector<VarBlock> blocks_;
};

// A clause set with per-family bookkeeping.
class CnfInstance {
 public:
  explicit CnfInstance(VarMap vars = VarMap(0)) : vars_(std::move(vars)) {}

  VarMap& vars() { return vars_; }
  const VarMap& vars() const { return vars_; }

  // Subsequent clauses are counted under this family name.
  void family(std::string name);

  void add(std::initializer_list<Lit> clause) { add(std::span<const Lit>(clause.begin(), clause.size())); }
  void add(std::span<const Lit> clause);
  void add(const std::vector<Lit>& clause) { add(std::span<const Lit>(clause)); }

  std::size_t num_clauses() const { return clauses_; }
  // All clauses, each terminated by 0.
  const std::vector<Lit>& literals() const { return lits_; }

  template <class Fn>
  void for_each_clause(Fn&& fn) const {
    std::size_t start = 0;
    for (std::size_t i = 0; i < lits_.size(); ++i)
      if (lits_[i] == 0) {
        fn(std::span<const Lit>(lits_.data() + start, i - start));
        start = i + 1;
      }
  }

  const std::vector<std::pair<std::string, std::size_t>>& families() const { return families_; }
  std::size_t family_count(std::string_view name) const;

  // Core elements (the instance may carry two extra extension elements).
  int n = 0;
  std::vector<std::string> flags;

 private:
  VarMap vars_;
  std::vector<Lit> lits_;
  std::size_t clauses_ = 0;
  std::vector<std::pair<std::string, std::size_t>> families_;
};

// Comment header (tool version, n, flags, variable blocks), "p cnf" line,
// then one clause per line.
void write_dimacs(const CnfInstance& inst, std::ostream& out);
std::string to_dimacs(const CnfInstance& inst);

struct DimacsFormula {
  int num_vars = 0;
  std::vector<std::vector<Lit>> clauses;
};
DimacsFormula parse_dimacs(std::istream& in);

}  // namespace rotsys
