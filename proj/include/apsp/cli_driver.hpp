#ifndef APSP_CLI_DRIVER_HPP
#define APSP_CLI_DRIVER_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "apsp/types.hpp"

namespace apsp::cli {

enum class Mode { kStatic, kDawg, kStree, kVerify };
enum class EngineKind { kDawg, kStree };
enum class InputFormat { kLines, kFasta };

struct RunConfig {
  Mode mode = Mode::kStatic;
  std::uint32_t min_len = 0;
  bool include_self = true;
  bool emit_zero = true;
  InputFormat format = InputFormat::kLines;
  bool stats = false;
  EngineKind verify_engine = EngineKind::kStree;
};

struct Op {
  enum Kind { kAdd, kDel, kSnapshot } kind = kAdd;
  std::string content;  // kAdd
  StringId id = 0;      // kDel
  int line = 0;
};

/// Thrown on malformed input; carries the 1-based line number.
struct ParseError {
  int line;
  std::string message;
};

/// Parses an op stream. In lines format a line is `ADD <string>`,
/// `DEL <id>`, `SNAPSHOT`, or a bare whitespace-free token (implicit ADD).
/// FASTA input turns each record into an ADD, uppercased, in file order.
std::vector<Op> parse_ops(std::istream& in, InputFormat format);

/// Runs one mode over an op stream read from `in`, writing records to
/// `out` and diagnostics to `err`. Returns the process exit code:
/// 0 ok, 2 parse/config error, 3 engine/oracle mismatch, 4 duplicate
/// string or unknown id.
int run(const RunConfig& config, std::istream& in, std::ostream& out,
        std::ostream& err);

/// Engine surface the verify harness drives; also implemented by test
/// stubs so the mismatch path itself can be exercised.
class DynamicEngine {
 public:
  struct AddOutcome {
    StringId id = 0;
    OverlapList f;
    OverlapList b;
  };

  struct Stats {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::uint64_t visits = 0;
  };

  virtual ~DynamicEngine() = default;
  virtual AddOutcome add(std::string_view content, std::uint32_t ell) = 0;
  virtual void erase(StringId id) = 0;
  virtual OverlapList snapshot() const = 0;
  virtual Stats stats() const { return {}; }
};

std::unique_ptr<DynamicEngine> make_dawg_engine();
std::unique_ptr<DynamicEngine> make_stree_engine();

/// Lockstep run of `engine` against the brute-force oracle: after every
/// op the per-string outputs and the full snapshot must match. On the
/// first difference prints `MISMATCH <i> <j> engine=<a> oracle=<b>`
/// (length -1 meaning a missing record) and returns 3.
int run_verify(DynamicEngine& engine, const std::vector<Op>& ops,
               std::uint32_t ell, std::ostream& out, std::ostream& err);

// --- bench ----------------------------------------------------------

struct BenchConfig {
  Mode mode = Mode::kDawg;  // kDawg, kStree, or kStatic
  std::size_t k = 100;
  std::size_t len = 50;
  std::uint32_t sigma = 4;
  std::uint64_t seed = 1;
  std::uint32_t min_len = 0;
};

struct BenchRow {
  std::size_t op_index = 0;
  StringId id = 0;
  std::size_t len = 0;
  double micros = 0.0;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::uint64_t visits = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  double total_micros = 0.0;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::uint64_t total_visits = 0;
  std::vector<std::string> inputs;  // the generated strings, in ADD order
};

/// Generates `k` distinct random strings of length `len` over the first
/// `sigma` lowercase letters (deterministic in `seed`) and runs the
/// selected engine over them, timing each operation.
BenchReport bench(const BenchConfig& config);

void write_bench_csv(const BenchReport& report, std::ostream& out);

}  // namespace apsp::cli

#endif  // APSP_CLI_DRIVER_HPP
