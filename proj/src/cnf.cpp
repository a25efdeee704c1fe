#include "rotsys/cnf.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "rotsys/combinatorics.hpp"
#include "rotsys/errors.hpp"
#include "rotsys/version.hpp"

namespace rotsys {

VarMap::VarMap(int elements) : n_(elements) {
  if (n_ < 3) {
    n_ = 0;
    return;
  }
  const int N = n_;
  fresh_block("x", N * (N - 1) * (N - 1));
  y_base_ = fresh_block("y", static_cast<int>(N * binomial(N - 1, 3)));
  c_base_ = fresh_block("c", static_cast<int>(3 * binomial(N, 4)));
  d_base_ = fresh_block("d", static_cast<int>(6 * binomial(N, 4)));
}

int VarMap::fresh_block(std::string name, int count) {
  const int first = next_;
  next_ += count;
  if (count > 0) blocks_.push_back({std::move(name), first, next_ - 1});
  return first;
}

int VarMap::x(Vertex a, int i, Vertex b) const {
  const int bb = b < a ? b : b - 1;
  return 1 + (a * (n_ - 1) + i) * (n_ - 1) + bb;
}

int VarMap::y_sorted(Vertex a, Vertex b, Vertex c, Vertex d) const {
  auto sq = [a](Vertex v) { return v < a ? v : v - 1; };
  const int rank = static_cast<int>(binomial(sq(b), 1) + binomial(sq(c), 2) + binomial(sq(d), 3));
  return y_base_ + static_cast<int>(a * binomial(n_ - 1, 3)) + rank;
}

Lit VarMap::y(Vertex a, Vertex b, Vertex c, Vertex d) const {
  Vertex t[3] = {b, c, d};
  std::sort(t, t + 3);
  const int v = y_sorted(a, t[0], t[1], t[2]);
  return even_order(b, c, d) ? v : -v;
}

int VarMap::quad_rank(const Vertex q[4]) const {
  return static_cast<int>(binomial(q[0], 1) + binomial(q[1], 2) + binomial(q[2], 3) + binomial(q[3], 4));
}

int VarMap::c_quad(const Vertex q[4], Pairing p) const {
  return c_base_ + 3 * quad_rank(q) + static_cast<int>(p);
}

int VarMap::d_quad(const Vertex q[4], Pairing p, int direction) const {
  return d_base_ + 6 * quad_rank(q) + 2 * static_cast<int>(p) + direction;
}

int VarMap::c(Edge e, Edge f) const {
  e = make_edge(e.first, e.second);
  f = make_edge(f.first, f.second);
  if (f.first < e.first) std::swap(e, f);
  Vertex q[4] = {e.first, e.second, f.first, f.second};
  std::sort(q, q + 4);
  const Pairing p = e.second == q[1] ? Pairing::AbCd : e.second == q[2] ? Pairing::AcBd : Pairing::AdBc;
  return c_quad(q, p);
}

void CnfInstance::family(std::string name) { families_.emplace_back(std::move(name), 0); }

void CnfInstance::add(std::span<const Lit> clause) {
  const int top = vars_.num_vars();
  for (Lit l : clause)
    if (l == 0 || l > top || -l > top) throw std::logic_error("clause literal outside the allocated range");
  lits_.insert(lits_.end(), clause.begin(), clause.end());
  lits_.push_back(0);
  ++clauses_;
  if (families_.empty()) families_.emplace_back("misc", 0);
  ++families_.back().second;
}

std::size_t CnfInstance::family_count(std::string_view name) const {
  std::size_t total = 0;
  for (const auto& [f, c] : families_)
    if (f == name) total += c;
  return total;
}

void write_dimacs(const CnfInstance& inst, std::ostream& out) {
  out << "c rotsys " << kVersion << "\n";
  out << "c n " << inst.n << " elements " << inst.vars().elements() << "\n";
  out << "c flags";
  for (const auto& f : inst.flags) out << ' ' << f;
  out << "\n";
  for (const auto& b : inst.vars().blocks()) out << "c " << b.name << "-block " << b.first << ".." << b.last << "\n";
  for (const auto& [f, c] : inst.families()) out << "c family " << f << ' ' << c << "\n";
  out << "p cnf " << inst.vars().num_vars() << ' ' << inst.num_clauses() << "\n";
  std::string line;
  for (Lit l : inst.literals()) {
    line += std::to_string(l);
    if (l == 0) {
      line += '\n';
      out << line;
      line.clear();
    } else {
      line += ' ';
    }
  }
}

std::string to_dimacs(const CnfInstance& inst) {
  std::ostringstream s;
  write_dimacs(inst, s);
  return s.str();
}

DimacsFormula parse_dimacs(std::istream& in) {
  DimacsFormula f;
  std::string line;
  std::vector<Lit> cur;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, cnf;
      std::size_t clauses = 0;
      ls >> p >> cnf >> f.num_vars >> clauses;
      header = true;
      continue;
    }
    Lit l;
    while (ls >> l) {
      if (l == 0) {
        f.clauses.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(l);
      }
    }
  }
  if (!header) throw ProtocolError("DIMACS input without a problem line");
  return f;
}

}  // namespace rotsys
