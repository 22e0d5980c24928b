#include "apsp/cli_driver.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "apsp/ac_automaton.hpp"
#include "apsp/dawg.hpp"
#include "apsp/errors.hpp"
#include "apsp/oracle.hpp"
#include "apsp/string_store.hpp"
#include "apsp/suffix_tree.hpp"

namespace apsp::cli {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream iss(line);
  std::string t;
  while (iss >> t) toks.push_back(t);
  return toks;
}

std::vector<Op> parse_lines(std::istream& in) {
  std::vector<Op> ops;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "ADD") {
      if (toks.size() != 2) throw ParseError{lineno, "ADD takes one string"};
      ops.push_back({Op::kAdd, toks[1], 0, lineno});
    } else if (toks[0] == "DEL") {
      if (toks.size() != 2) throw ParseError{lineno, "DEL takes one id"};
      StringId id = 0;
      try {
        std::size_t used = 0;
        id = std::stoull(toks[1], &used);
        if (used != toks[1].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError{lineno, "DEL id is not a number: " + toks[1]};
      }
      ops.push_back({Op::kDel, "", id, lineno});
    } else if (toks[0] == "SNAPSHOT") {
      if (toks.size() != 1) throw ParseError{lineno, "SNAPSHOT takes no argument"};
      ops.push_back({Op::kSnapshot, "", 0, lineno});
    } else if (toks.size() == 1) {
      ops.push_back({Op::kAdd, toks[0], 0, lineno});  // bare token
    } else {
      throw ParseError{lineno, "unrecognized line"};
    }
  }
  return ops;
}

std::vector<Op> parse_fasta(std::istream& in) {
  std::vector<Op> ops;
  std::string line;
  int lineno = 0;
  bool in_record = false;
  int record_line = 0;
  std::string seq;
  auto flush = [&]() {
    if (!in_record) return;
    if (seq.empty()) throw ParseError{record_line, "FASTA record without sequence"};
    ops.push_back({Op::kAdd, seq, 0, record_line});
    seq.clear();
  };
  while (std::getline(in, line)) {
    lineno++;
    if (line.empty()) continue;
    if (line[0] == '>') {
      flush();
      in_record = true;
      record_line = lineno;
      continue;
    }
    if (!in_record) throw ParseError{lineno, "sequence data before FASTA header"};
    for (char c : line) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      seq.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
  }
  flush();
  return ops;
}

void emit_records(std::ostream& out, const OverlapList& records,
                  const RunConfig& config) {
  for (const OverlapRecord& r : records) {
    if (!config.include_self && r.i == r.j) continue;
    if (!config.emit_zero && r.len == 0) continue;
    out << "OVL\t" << r.i << '\t' << r.j << '\t' << r.len << '\n';
  }
}

/// First (i, j) where the two sorted record lists disagree; -1 encodes a
/// missing record on that side.
std::optional<std::tuple<StringId, StringId, long long, long long>>
first_mismatch(const OverlapList& engine, const OverlapList& ora) {
  std::map<std::pair<StringId, StringId>, std::uint32_t> em, om;
  for (const OverlapRecord& r : engine) em[{r.i, r.j}] = r.len;
  for (const OverlapRecord& r : ora) om[{r.i, r.j}] = r.len;
  auto ei = em.begin();
  auto oi = om.begin();
  while (ei != em.end() || oi != om.end()) {
    if (oi == om.end() || (ei != em.end() && ei->first < oi->first)) {
      return std::make_tuple(ei->first.first, ei->first.second,
                             static_cast<long long>(ei->second), -1LL);
    }
    if (ei == em.end() || oi->first < ei->first) {
      return std::make_tuple(oi->first.first, oi->first.second, -1LL,
                             static_cast<long long>(oi->second));
    }
    if (ei->second != oi->second) {
      return std::make_tuple(ei->first.first, ei->first.second,
                             static_cast<long long>(ei->second),
                             static_cast<long long>(oi->second));
    }
    ++ei;
    ++oi;
  }
  return std::nullopt;
}

class DawgEngineAdapter : public DynamicEngine {
 public:
  AddOutcome add(std::string_view content, std::uint32_t ell) override {
    DawgEngine::Added a = engine_.add(content, ell);
    return {a.id, std::move(a.f), std::move(a.b)};
  }
  void erase(StringId) override {
    throw std::logic_error("the insert-only engine cannot delete");
  }
  OverlapList snapshot() const override { return engine_.snapshot(); }
  Stats stats() const override {
    auto& self = const_cast<DawgEngine&>(engine_);
    return {self.forward_index().node_count() +
                self.reversed_index().node_count(),
            self.forward_index().transition_count() +
                self.reversed_index().transition_count(),
            self.forward_index().ctrie().stats().touched +
                self.reversed_index().ctrie().stats().touched};
  }

 private:
  DawgEngine engine_;
};

class StreeEngineAdapter : public DynamicEngine {
 public:
  AddOutcome add(std::string_view content, std::uint32_t ell) override {
    StreeEngine::Added a = engine_.add(content, ell);
    return {a.id, std::move(a.f), std::move(a.b)};
  }
  void erase(StringId id) override { engine_.erase(id); }
  OverlapList snapshot() const override { return engine_.snapshot(); }
  Stats stats() const override {
    auto& self = const_cast<StreeEngine&>(engine_);
    return {self.forward_index().node_count() +
                self.reversed_index().node_count(),
            self.forward_index().node_count() - 1 +
                self.reversed_index().node_count() - 1,
            self.forward_index().ctrie().stats().touched +
                self.reversed_index().ctrie().stats().touched};
  }

 private:
  StreeEngine engine_;
};

void print_stats(std::ostream& out, const DynamicEngine::Stats& s) {
  out << "# nodes=" << s.nodes << " edges=" << s.edges << " visits=" << s.visits
      << '\n';
}

int run_static(const RunConfig& config, const std::vector<Op>& ops,
               std::ostream& out, std::ostream& err) {
  StringStore store;
  std::vector<std::pair<StringId, std::string>> strings;
  bool any_snapshot = false;
  auto solve_and_emit = [&]() {
    OverlapList result = solve_static(strings, config.min_len);
    emit_records(out, result, config);
  };
  for (const Op& op : ops) {
    if (op.kind == Op::kAdd) {
      try {
        StringId id = store.register_string(op.content);
        strings.emplace_back(id, op.content);
      } catch (const Error& e) {
        err << "error at line " << op.line << ": " << e.what() << '\n';
        return 4;
      }
    } else if (op.kind == Op::kSnapshot) {
      any_snapshot = true;
      solve_and_emit();
    }
  }
  if (!any_snapshot) solve_and_emit();
  if (config.stats) {
    AcAutomaton ac = AcAutomaton::build(strings);
    for (const auto& [id, content] : strings) ac.query(id, config.min_len);
    print_stats(out, {ac.node_count(), ac.node_count() - 1,
                      ac.ctrie().stats().touched});
  }
  return 0;
}

int run_dynamic(const RunConfig& config, const std::vector<Op>& ops,
                std::ostream& out, std::ostream& err) {
  std::unique_ptr<DynamicEngine> engine;
  if (config.mode == Mode::kDawg) {
    engine = make_dawg_engine();
  } else {
    engine = make_stree_engine();
  }
  for (const Op& op : ops) {
    try {
      switch (op.kind) {
        case Op::kAdd: {
          DynamicEngine::AddOutcome a = engine->add(op.content, config.min_len);
          out << "ID\t" << a.id << '\n';
          emit_records(out, a.f, config);
          OverlapList b_rest;  // the (i,i) record is deduplicated into F
          for (const OverlapRecord& r : a.b) {
            if (r.i != a.id || r.j != a.id) b_rest.push_back(r);
          }
          emit_records(out, b_rest, config);
          break;
        }
        case Op::kDel:
          engine->erase(op.id);
          out << "DEL-OK\t" << op.id << '\n';
          break;
        case Op::kSnapshot: {
          OverlapList snap = engine->snapshot();
          emit_records(out, snap, config);
          break;
        }
      }
    } catch (const Error& e) {
      err << "error at line " << op.line << ": " << e.what() << '\n';
      return 4;
    }
  }
  if (config.stats) print_stats(out, engine->stats());
  return 0;
}

}  // namespace

std::vector<Op> parse_ops(std::istream& in, InputFormat format) {
  return format == InputFormat::kLines ? parse_lines(in) : parse_fasta(in);
}

std::unique_ptr<DynamicEngine> make_dawg_engine() {
  return std::make_unique<DawgEngineAdapter>();
}

std::unique_ptr<DynamicEngine> make_stree_engine() {
  return std::make_unique<StreeEngineAdapter>();
}

int run_verify(DynamicEngine& engine, const std::vector<Op>& ops,
               std::uint32_t ell, std::ostream& out, std::ostream& err) {
  oracle::NaiveSet alive;
  std::size_t checked = 0;
  auto report = [&](const std::tuple<StringId, StringId, long long, long long>&
                        diff) -> int {
    out << "MISMATCH " << std::get<0>(diff) << ' ' << std::get<1>(diff)
        << " engine=" << std::get<2>(diff) << " oracle=" << std::get<3>(diff)
        << '\n';
    return 3;
  };
  auto check_snapshot = [&]() -> std::optional<int> {
    OverlapList snap = engine.snapshot();
    OverlapList expect = oracle::apsp_naive(alive, ell);
    if (auto diff = first_mismatch(snap, expect)) return report(*diff);
    return std::nullopt;
  };
  for (const Op& op : ops) {
    try {
      switch (op.kind) {
        case Op::kAdd: {
          DynamicEngine::AddOutcome a = engine.add(op.content, ell);
          alive[a.id] = op.content;
          OverlapList expect_f, expect_b;
          for (const auto& [j, sj] : alive) {
            std::uint32_t lf = oracle::lspo_naive(op.content, sj);
            if (lf >= ell) expect_f.push_back({a.id, j, lf});
            std::uint32_t lb = oracle::lspo_naive(sj, op.content);
            if (lb >= ell) expect_b.push_back({j, a.id, lb});
          }
          std::sort(expect_f.begin(), expect_f.end());
          std::sort(expect_b.begin(), expect_b.end());
          if (auto diff = first_mismatch(a.f, expect_f)) return report(*diff);
          if (auto diff = first_mismatch(a.b, expect_b)) return report(*diff);
          break;
        }
        case Op::kDel:
          engine.erase(op.id);
          alive.erase(op.id);
          break;
        case Op::kSnapshot:
          break;  // every op already ends in a snapshot check
      }
    } catch (const Error& e) {
      err << "error at line " << op.line << ": " << e.what() << '\n';
      return 4;
    }
    if (auto rc = check_snapshot()) return *rc;
    checked++;
  }
  out << "# verify-ok ops=" << checked << '\n';
  return 0;
}

int run(const RunConfig& config, std::istream& in, std::ostream& out,
        std::ostream& err) {
  std::vector<Op> ops;
  try {
    ops = parse_ops(in, config.format);
  } catch (const ParseError& e) {
    err << "parse error at line " << e.line << ": " << e.message << '\n';
    return 2;
  }

  bool deletions_ok =
      config.mode == Mode::kStree ||
      (config.mode == Mode::kVerify && config.verify_engine == EngineKind::kStree);
  if (!deletions_ok) {
    for (const Op& op : ops) {
      if (op.kind == Op::kDel) {
        err << "parse error at line " << op.line
            << ": DEL not supported by this mode\n";
        return 2;
      }
    }
  }

  switch (config.mode) {
    case Mode::kStatic:
      return run_static(config, ops, out, err);
    case Mode::kDawg:
    case Mode::kStree:
      return run_dynamic(config, ops, out, err);
    case Mode::kVerify: {
      std::unique_ptr<DynamicEngine> engine =
          config.verify_engine == EngineKind::kDawg ? make_dawg_engine()
                                                    : make_stree_engine();
      return run_verify(*engine, ops, config.min_len, out, err);
    }
  }
  return 0;
}

BenchReport bench(const BenchConfig& config) {
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(config.sigma) - 1);
  std::set<std::string> seen;
  BenchReport report;
  for (std::size_t i = 0; i < config.k; ++i) {
    std::string s;
    int attempts = 0;
    do {
      if (++attempts > 100000) {
        throw std::runtime_error("bench: cannot generate enough distinct strings");
      }
      s.clear();
      for (std::size_t c = 0; c < config.len; ++c) {
        s.push_back(static_cast<char>('a' + pick(rng)));
      }
    } while (seen.count(s) > 0);
    seen.insert(s);
    report.inputs.push_back(std::move(s));
  }

  using Clock = std::chrono::steady_clock;
  auto micros_since = [](Clock::time_point t0) {
    return std::chrono::duration<double, std::micro>(Clock::now() - t0).count();
  };

  auto push_row = [&](std::size_t op, StringId id, std::size_t len,
                      double micros, const DynamicEngine::Stats& s) {
    std::uint64_t delta = s.visits - report.total_visits;
    report.rows.push_back({op, id, len, micros, s.nodes, s.edges, delta});
    report.total_micros += micros;
    report.nodes = s.nodes;
    report.edges = s.edges;
    report.total_visits = s.visits;
  };

  if (config.mode == Mode::kDawg) {
    DawgEngineAdapter engine;
    for (std::size_t i = 0; i < report.inputs.size(); ++i) {
      auto t0 = Clock::now();
      auto a = engine.add(report.inputs[i], config.min_len);
      double us = micros_since(t0);
      push_row(i + 1, a.id, report.inputs[i].size(), us, engine.stats());
    }
  } else if (config.mode == Mode::kStree) {
    StreeEngineAdapter engine;
    for (std::size_t i = 0; i < report.inputs.size(); ++i) {
      auto t0 = Clock::now();
      auto a = engine.add(report.inputs[i], config.min_len);
      double us = micros_since(t0);
      push_row(i + 1, a.id, report.inputs[i].size(), us, engine.stats());
    }
  } else {
    std::vector<std::pair<StringId, std::string>> strings;
    StringStore store;
    for (const std::string& s : report.inputs) {
      strings.emplace_back(store.register_string(s), s);
    }
    auto t0 = Clock::now();
    AcAutomaton ac = AcAutomaton::build(strings);
    report.total_micros += micros_since(t0);
    for (std::size_t i = 0; i < strings.size(); ++i) {
      auto q0 = Clock::now();
      ac.query(strings[i].first, config.min_len);
      double us = micros_since(q0);
      DynamicEngine::Stats s{ac.node_count(), ac.node_count() - 1,
                             ac.ctrie().stats().touched};
      push_row(i + 1, strings[i].first, strings[i].second.size(), us, s);
    }
  }
  return report;
}

void write_bench_csv(const BenchReport& report, std::ostream& out) {
  out << "op,id,len,micros,nodes,edges,visits\n";
  for (const BenchRow& r : report.rows) {
    out << r.op_index << ',' << r.id << ',' << r.len << ',' << r.micros << ','
        << r.nodes << ',' << r.edges << ',' << r.visits << '\n';
  }
  out << "# total micros=" << report.total_micros << " nodes=" << report.nodes
      << " edges=" << report.edges << " visits=" << report.total_visits << '\n';
}

}  // namespace apsp::cli
