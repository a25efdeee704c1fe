#include "rotsys/solver.hpp"

#include <fcntl.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cadical.hpp>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "rotsys/encode.hpp"
#include "rotsys/errors.hpp"

extern char** environ;

namespace rotsys {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

const char* to_string(Status s) {
  switch (s) {
    case Status::Sat:
      return "SAT";
    case Status::Unsat:
      return "UNSAT";
    case Status::Unknown:
      return "UNKNOWN";
  }
  return "?";
}

std::string default_solver_path() {
  if (const char* env = std::getenv("ROTSYS_SOLVER"); env && *env) return env;
#ifdef ROTSYS_DEFAULT_SOLVER
  if (fs::exists(ROTSYS_DEFAULT_SOLVER)) return ROTSYS_DEFAULT_SOLVER;
#endif
  return "cadical";
}

SolveOutcome parse_solver_output(const std::string& text, int num_vars) {
  SolveOutcome out;
  std::istringstream in(text);
  std::string line;
  bool have_status = false, terminated = false;
  std::vector<signed char> values(static_cast<std::size_t>(num_vars) + 1, 0);
  while (std::getline(in, line)) {
    if (line.rfind("s ", 0) == 0) {
      have_status = true;
      if (line.find("UNSATISFIABLE") != std::string::npos)
        out.status = Status::Unsat;
      else if (line.find("SATISFIABLE") != std::string::npos)
        out.status = Status::Sat;
      else
        out.status = Status::Unknown;
    } else if (line.rfind("v", 0) == 0) {
      std::istringstream ls(line.substr(1));
      long lit;
      while (ls >> lit) {
        if (lit == 0) {
          terminated = true;
          continue;
        }
        const long var = lit > 0 ? lit : -lit;
        if (var <= num_vars) values[var] = lit > 0 ? 1 : -1;
      }
    }
  }
  if (!have_status) {
    out.status = Status::Unknown;
    return out;
  }
  if (out.status == Status::Sat) {
    if (!terminated) throw ProtocolError("model section is not terminated by 0");
    for (int v = 1; v <= num_vars; ++v)
      if (values[v] == 0) throw ProtocolError("model misses variable " + std::to_string(v));
    out.values = std::move(values);
  }
  return out;
}

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch_dir() {
  static std::atomic<int> counter{0};
  auto dir = fs::temp_directory_path() /
             ("rotsys-" + std::to_string(::getpid()) + "-" + std::to_string(counter.fetch_add(1)));
  fs::create_directories(dir);
  return dir;
}

class SubprocessSession : public SolverSession {
 public:
  SubprocessSession(const CnfInstance& inst, SolverOptions opts)
      : opts_(std::move(opts)), num_vars_(inst.vars().num_vars()), base_clauses_(inst.num_clauses()) {
    if (opts_.solver_path.empty()) opts_.solver_path = default_solver_path();
    std::ostringstream s;
    write_dimacs(inst, s);
    // Keep the comment header and the clause lines; the problem line is
    // rewritten on every call.
    std::string text = s.str();
    const auto p = text.find("\np cnf ");
    header_ = text.substr(0, p + 1);
    const auto body = text.find('\n', p + 1);
    body_ = text.substr(body + 1);
    dir_ = scratch_dir();
  }
  ~SubprocessSession() override {
    std::error_code ec;
    fs::remove_all(dir_, ec);
  }

  void add_clause(std::span<const Lit> clause) override {
    for (Lit l : clause) extra_ += std::to_string(l) + ' ';
    extra_ += "0\n";
    ++extra_clauses_;
  }

  SolveOutcome solve() override {
    const auto cnf = dir_ / "instance.cnf";
    {
      std::ofstream out(cnf, std::ios::binary);
      out << header_ << "p cnf " << num_vars_ << ' ' << base_clauses_ + extra_clauses_ << '\n' << body_ << extra_;
    }
    const auto out_path = dir_ / "stdout.txt";
    const auto err_path = dir_ / "stderr.txt";

    posix_spawn_file_actions_t actions;
    posix_spawn_file_actions_init(&actions);
    posix_spawn_file_actions_addopen(&actions, 1, out_path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
    posix_spawn_file_actions_addopen(&actions, 2, err_path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
    std::vector<std::string> args = {opts_.solver_path, cnf.string()};
    if (!opts_.proof_path.empty()) args.push_back(opts_.proof_path);
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    argv.push_back(nullptr);

    const auto start = Clock::now();
    pid_t pid = 0;
    const int rc = posix_spawnp(&pid, opts_.solver_path.c_str(), &actions, nullptr, argv.data(), environ);
    posix_spawn_file_actions_destroy(&actions);
    if (rc != 0) throw SolverError("cannot run solver '" + opts_.solver_path + "': " + std::strerror(rc));

    int wstatus = 0;
    bool timed_out = false;
    while (true) {
      const pid_t r = ::waitpid(pid, &wstatus, WNOHANG);
      if (r == pid) break;
      if (r < 0) throw SolverError("waitpid failed");
      const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
      if (opts_.timeout > 0 && elapsed > opts_.timeout) {
        ::kill(pid, SIGKILL);
        ::waitpid(pid, &wstatus, 0);
        timed_out = true;
        break;
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(elapsed < 1 ? 1 : 20));
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    SolveOutcome out;
    if (timed_out) {
      out.status = Status::Unknown;
      out.seconds = seconds;
      out.exit_code = -1;
      return out;
    }
    const int code = WIFEXITED(wstatus) ? WEXITSTATUS(wstatus) : -1;
    if (code == 127) throw SolverError("solver '" + opts_.solver_path + "' not found: " + read_file(err_path));
    out = parse_solver_output(read_file(out_path), num_vars_);
    if (out.status == Status::Unknown && !WIFEXITED(wstatus))
      throw SolverError("solver terminated abnormally: " + read_file(err_path));
    out.seconds = seconds;
    out.exit_code = code;
    return out;
  }

 private:
  SolverOptions opts_;
  int num_vars_;
  std::size_t base_clauses_;
  std::size_t extra_clauses_ = 0;
  std::string header_, body_, extra_;
  fs::path dir_;
};

class Deadline : public CaDiCaL::Terminator {
 public:
  explicit Deadline(double seconds) : seconds_(seconds), start_(Clock::now()) {}
  void restart() { start_ = Clock::now(); }
  bool terminate() override {
    return seconds_ > 0 && std::chrono::duration<double>(Clock::now() - start_).count() > seconds_;
  }

 private:
  double seconds_;
  Clock::time_point start_;
};

class IncrementalSession : public SolverSession {
 public:
  IncrementalSession(const CnfInstance& inst, const SolverOptions& opts)
      : num_vars_(inst.vars().num_vars()), deadline_(opts.timeout) {
    if (!opts.proof_path.empty() && !solver_.trace_proof(opts.proof_path.c_str()))
      throw SolverError("cannot open proof file " + opts.proof_path);
    solver_.connect_terminator(&deadline_);
    for (Lit l : inst.literals()) solver_.add(l);
  }
  ~IncrementalSession() override { solver_.disconnect_terminator(); }

  void add_clause(std::span<const Lit> clause) override {
    for (Lit l : clause) solver_.add(l);
    solver_.add(0);
  }

  SolveOutcome solve() override {
    deadline_.restart();
    const auto start = Clock::now();
    const int r = solver_.solve();
    SolveOutcome out;
    out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    out.exit_code = r;
    if (r == 10) {
      out.status = Status::Sat;
      out.values.assign(static_cast<std::size_t>(num_vars_) + 1, 0);
      for (int v = 1; v <= num_vars_; ++v) out.values[v] = solver_.val(v) > 0 ? 1 : -1;
    } else if (r == 20) {
      out.status = Status::Unsat;
    }
    return out;
  }

 private:
  int num_vars_;
  Deadline deadline_;
  CaDiCaL::Solver solver_;
};

}  // namespace

std::unique_ptr<SolverSession> open_session(const CnfInstance& inst, const SolverOptions& opts) {
  if (opts.backend == Backend::Subprocess) return std::make_unique<SubprocessSession>(inst, opts);
  return std::make_unique<IncrementalSession>(inst, opts);
}

SolveOutcome solve(const CnfInstance& inst, const SolverOptions& opts) { return open_session(inst, opts)->solve(); }

PreRotationSystem decode_model(const SolveOutcome& model, const VarMap& vars) {
  if (model.status != Status::Sat) throw DecodeError("no model to decode");
  const int N = vars.elements();
  std::vector<std::vector<Vertex>> rows(N);
  for (int a = 0; a < N; ++a)
    for (int i = 0; i < N - 1; ++i) {
      int found = -1;
      for (int b = 0; b < N; ++b) {
        if (b == a || !model.value(vars.x(a, i, b))) continue;
        if (found >= 0) throw DecodeError("two values at one rotation position");
        found = b;
      }
      if (found < 0) throw DecodeError("empty rotation position");
      rows[a].push_back(found);
    }
  PreRotationSystem pi = [&] {
    try {
      return PreRotationSystem(rows);
    } catch (const InvalidArgument& e) {
      throw DecodeError(std::string("X block is not a pre-rotation system: ") + e.what());
    }
  }();
  if (pi.rotations() != rows) throw DecodeError("X block is not smallest-first");
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = b + 1; c < N; ++c)
        for (int d = c + 1; d < N; ++d) {
          if (a == b || a == c || a == d) continue;
          if (model.value(vars.y_sorted(a, b, c, d)) != pi.ccw(a, b, c, d))
            throw DecodeError("Y block disagrees with X block");
        }
  return pi;
}

PreRotationSystem project(const PreRotationSystem& pi, int core) {
  if (core >= pi.size()) return pi;
  std::vector<Vertex> s(core);
  for (int i = 0; i < core; ++i) s[i] = i;
  return restrict_to(pi, s);
}

EnumerationStats enumerate_all(const CnfInstance& inst, const SolverOptions& solver, const EnumerationOptions& opts,
                               const EnumerationVisitor& visit) {
  const auto start = Clock::now();
  const int core = opts.core > 0 ? opts.core : inst.vars().elements();
  std::vector<Vertex> ground(core);
  for (int i = 0; i < core; ++i) ground[i] = i;

  auto session = open_session(inst, solver);
  EnumerationStats stats;
  std::set<std::vector<Vertex>> seen_models, seen_classes;
  while (opts.limit == 0 || stats.emitted < opts.limit) {
    const auto out = session->solve();
    if (out.status == Status::Unknown)
      throw EnumerationAborted("solver returned UNKNOWN after " + std::to_string(stats.emitted) + " systems");
    if (out.status == Status::Unsat) break;
    ++stats.models;
    const auto sys = project(decode_model(out, inst.vars()), core);
    if (!seen_models.insert(sys.flat()).second) throw std::logic_error("a blocked model reappeared");

    bool report = true;
    if (opts.dedup == Dedup::Canonical) report = seen_classes.insert(canonical_form(sys).flat()).second;
    bool more = true;
    if (report) {
      ++stats.emitted;
      more = visit(sys, out);
    }

    std::vector<PreRotationSystem> block;
    if (opts.dedup == Dedup::None || opts.lexmin)
      block.push_back(sys);
    else if (opts.natural)
      block = natural_relabelings(sys);
    else
      block = all_relabelings(sys);
    for (const auto& b : block) {
      session->add_clause(exclusion_clause(inst.vars(), ground, b));
      ++stats.blocking_clauses;
    }
    if (!more) break;
  }
  stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return stats;
}

std::vector<PreRotationSystem> enumerate_systems(const CnfInstance& inst, const SolverOptions& solver,
                                                 const EnumerationOptions& opts) {
  std::vector<PreRotationSystem> out;
  enumerate_all(inst, solver, opts, [&](const PreRotationSystem& p, const SolveOutcome&) {
    out.push_back(p);
    return true;
  });
  return out;
}

}  // namespace rotsys
