#include "cycdeg/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "cycdeg/degree_sets.hpp"
#include "cycdeg/survey.hpp"

namespace cycdeg::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr u64 kDegsetCap = 100'000'000;        // bitset memory bound
constexpr u64 kOptimalCap = u64{1} << 40;      // factorization envelope

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::vector<u64> split_checkpoints(const std::string& text) {
  std::vector<u64> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    try {
      out.push_back(std::stoull(text.substr(pos, comma - pos)));
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("checkpoint value does not fit in 64 bits");
    }
    pos = comma + 1;
  }
  return out;
}

// Grammar check only; range checks happen in the survey calls.
const CLI::Validator checkpoint_grammar(
    [](std::string& text) -> std::string {
      if (text.empty()) return "empty checkpoint list";
      bool digit_seen = false;
      for (char c : text) {
        if (c == ',') {
          if (!digit_seen) return "malformed checkpoint list";
          digit_seen = false;
        } else if (c >= '0' && c <= '9') {
          digit_seen = true;
        } else {
          return "checkpoint list may contain only digits and commas";
        }
      }
      return digit_seen ? std::string{} : "malformed checkpoint list";
    },
    "CHECKPOINTS");

u64 isqrt_u64(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Sieve sized for single-n work: factor n and all of its divisors, falling
// back to trial division past the table.
SpfTable single_n_table(u64 n) {
  return SpfTable(std::clamp<u64>(std::max(isqrt_u64(n) + 1, std::min<u64>(n, 2'000'000)),
                                  16, SpfTable::kMaxLimit));
}

void emit_degset(const FieldSpec& field, u64 n, const std::string& format,
                 std::ostream& out) {
  if (n < 1 || n > kDegsetCap)
    throw std::invalid_argument("degset: n must be in [1, 10^8]");
  const SpfTable table = single_n_table(n);
  const DegreeSet ds = degree_set(field, n, table);
  if (format == "json") {
    out << to_json(ds) << "\n";
  } else if (format == "csv") {
    out << "degree\n";
    for (u64 m : degrees(ds)) out << m << "\n";
  } else {
    if (n <= 512) {
      bool first = true;
      for (u64 m : degrees(ds)) {
        if (!first) out << " ";
        out << m;
        first = false;
      }
      out << "\n";
    } else {
      out << ds.bits.to_hex() << "\n";
    }
  }
}

void emit_practical(const FieldSpec& field, u64 limit, bool list,
                    const std::string& format, unsigned threads, std::ostream& out) {
  const SpfTable table(std::clamp<u64>(limit, 16, SpfTable::kMaxLimit));
  if (list) {
    const std::vector<u64> values = list_f_practical(field, limit, table, threads);
    if (format == "json") {
      ordered_json j;
      j["field"] = field.to_string();
      j["limit"] = limit;
      j["count"] = values.size();
      j["values"] = values;
      out << j.dump() << "\n";
    } else if (format == "csv") {
      out << "n\n";
      for (u64 v : values) out << v << "\n";
    } else {
      for (u64 v : values) out << v << "\n";
    }
    return;
  }
  const u64 count = count_f_practical(field, {limit}, table, threads).back().count;
  if (format == "json") {
    ordered_json j;
    j["field"] = field.to_string();
    j["limit"] = limit;
    j["count"] = count;
    out << j.dump() << "\n";
  } else if (format == "csv") {
    out << "limit,count\n" << limit << "," << count << "\n";
  } else {
    out << count << "\n";
  }
}

void emit_survey(const FieldSpec& field, const std::vector<u64>& checkpoints,
                 const std::string& format, unsigned threads, std::ostream& out) {
  if (checkpoints.empty())
    throw std::invalid_argument("survey: checkpoint list must not be empty");
  const SpfTable table(std::clamp<u64>(checkpoints.back(), 16, SpfTable::kMaxLimit));
  const auto records = count_f_practical(field, checkpoints, table, threads);
  if (format == "json") {
    std::string line = "[";
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (i) line += ",";
      line += "{\"x\":" + std::to_string(records[i].x) +
              ",\"count\":" + std::to_string(records[i].count) +
              ",\"ratio\":" + fmt6(records[i].ratio) + "}";
    }
    out << line << "]\n";
  } else if (format == "text") {
    for (const auto& r : records)
      out << r.x << " " << r.count << " " << fmt6(r.ratio) << "\n";
  } else {
    out << "x,count,ratio\n";
    for (const auto& r : records)
      out << r.x << "," << r.count << "," << fmt6(r.ratio) << "\n";
  }
}

void emit_hits(const FieldSpec& field, u64 x, u64 m, const std::string& format,
               unsigned threads, std::ostream& out) {
  const SpfTable table(std::clamp<u64>(x, 16, SpfTable::kMaxLimit));
  const u64 count = count_degree_hits(field, x, m, table, threads);
  if (format == "json") {
    ordered_json j;
    j["field"] = field.to_string();
    j["x"] = x;
    j["m"] = m;
    j["count"] = count;
    out << j.dump() << "\n";
  } else if (format == "csv") {
    out << "x,m,count\n" << x << "," << m << "," << count << "\n";
  } else {
    out << count << "\n";
  }
}

void emit_hcount(u64 x, u64 y, u64 z, const std::string& format, unsigned threads,
                 std::ostream& out) {
  const SpfTable table(std::clamp<u64>(x, 16, SpfTable::kMaxLimit));
  const u64 count = h_count(x, y, z, table, threads);
  if (format == "json") {
    ordered_json j;
    j["x"] = x;
    j["y"] = y;
    j["z"] = z;
    j["count"] = count;
    out << j.dump() << "\n";
  } else if (format == "csv") {
    out << "x,y,z,count\n" << x << "," << y << "," << z << "," << count << "\n";
  } else {
    out << count << "\n";
  }
}

void emit_optimal(u64 limit, const std::string& format, std::ostream& out) {
  if (limit < 1 || limit > kOptimalCap)
    throw std::invalid_argument("optimal: limit must be in [1, 2^40]");
  const SpfTable table = single_n_table(limit);
  const std::vector<u64> values = enumerate_q_optimal(limit, table);
  if (format == "json") {
    ordered_json j;
    j["limit"] = limit;
    j["values"] = values;
    out << j.dump() << "\n";
  } else if (format == "csv") {
    out << "n\n";
    for (u64 v : values) out << v << "\n";
  } else {
    bool first = true;
    for (u64 v : values) {
      if (!first) out << " ";
      out << v;
      first = false;
    }
    out << "\n";
  }
}

void emit_efficient(u64 limit, const std::vector<u64>& checkpoints,
                    const std::string& format, unsigned threads, std::ostream& out) {
  const SpfTable table(std::clamp<u64>(limit, 16, SpfTable::kMaxLimit));
  const auto records = q_efficient_density(limit, checkpoints, table, threads);
  if (format == "json") {
    std::string line = "[";
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (i) line += ",";
      line += "{\"x\":" + std::to_string(records[i].x) +
              ",\"count\":" + std::to_string(records[i].count) +
              ",\"density\":" + fmt6(records[i].density) + "}";
    }
    out << line << "]\n";
  } else if (format == "text") {
    for (const auto& r : records)
      out << r.x << " " << r.count << " " << fmt6(r.density) << "\n";
  } else {
    out << "x,count,density\n";
    for (const auto& r : records)
      out << r.x << "," << r.count << "," << fmt6(r.density) << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degree sets of T^n - 1 over Q, F_p and quadratic fields", "cycdeg"};
  app.require_subcommand(1);

  unsigned threads = 1;
  app.add_option("--threads", threads, "worker threads for surveys (default 1)")
      ->check(CLI::Range(1u, 256u));

  const std::vector<std::string> formats = {"text", "csv", "json"};

  std::string ds_field = "q", ds_format = "text";
  u64 ds_n = 0;
  auto* degset = app.add_subcommand("degset", "degree set of T^n - 1");
  degset->fallthrough();
  degset->add_option("--field", ds_field, "q | fp:<p> | quad:<D>")->required();
  degset->add_option("--n", ds_n, "exponent n")->required();
  degset->add_option("--format", ds_format)->check(CLI::IsMember(formats));

  std::string pr_field = "q", pr_format = "text";
  u64 pr_limit = 0;
  bool pr_list = false;
  auto* practical = app.add_subcommand("practical", "count F-practical n <= limit");
  practical->fallthrough();
  practical->add_option("--field", pr_field)->required();
  practical->add_option("--limit", pr_limit)->required();
  practical->add_flag("--list", pr_list, "print the numbers themselves");
  practical->add_option("--format", pr_format)->check(CLI::IsMember(formats));

  std::string sv_field = "q", sv_checkpoints, sv_format = "csv";
  auto* survey = app.add_subcommand("survey", "F-practical counts at checkpoints");
  survey->fallthrough();
  survey->add_option("--field", sv_field)->required();
  survey->add_option("--checkpoints", sv_checkpoints, "x1,x2,...")
      ->required()
      ->check(checkpoint_grammar);
  survey->add_option("--format", sv_format)->check(CLI::IsMember(formats));

  std::string ht_field = "q", ht_format = "text";
  u64 ht_x = 0, ht_m = 0;
  auto* hits = app.add_subcommand("hits", "count n <= x with m in D_F(n)");
  hits->fallthrough();
  hits->add_option("--field", ht_field)->required();
  hits->add_option("--x", ht_x)->required();
  hits->add_option("--m", ht_m)->required();
  hits->add_option("--format", ht_format)->check(CLI::IsMember(formats));

  std::string hc_format = "text";
  u64 hc_x = 0, hc_y = 0, hc_z = 0;
  auto* hcount = app.add_subcommand("hcount", "count n <= x with a divisor in (y, z]");
  hcount->fallthrough();
  hcount->add_option("--x", hc_x)->required();
  hcount->add_option("--y", hc_y)->required();
  hcount->add_option("--z", hc_z)->required();
  hcount->add_option("--format", hc_format)->check(CLI::IsMember(formats));

  std::string op_format = "text";
  u64 op_limit = 0;
  auto* optimal = app.add_subcommand("optimal", "all Q-optimal n <= limit");
  optimal->fallthrough();
  optimal->add_option("--limit", op_limit)->required();
  optimal->add_option("--format", op_format)->check(CLI::IsMember(formats));

  std::string ef_checkpoints, ef_format = "csv";
  u64 ef_limit = 0;
  auto* efficient = app.add_subcommand("efficient", "Q-efficient counts at checkpoints");
  efficient->fallthrough();
  efficient->add_option("--limit", ef_limit)->required();
  efficient->add_option("--checkpoints", ef_checkpoints, "x1,x2,...")
      ->required()
      ->check(checkpoint_grammar);
  efficient->add_option("--format", ef_format)->check(CLI::IsMember(formats));

  std::string vf_suite;
  u64 vf_limit = 0;
  auto* verify = app.add_subcommand("verify", "run a named property suite");
  verify->fallthrough();
  verify->add_option("--suite", vf_suite)->required();
  verify->add_option("--limit", vf_limit)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*degset) {
      emit_degset(parse_field(ds_field), ds_n, ds_format, out);
    } else if (*practical) {
      emit_practical(parse_field(pr_field), pr_limit, pr_list, pr_format, threads, out);
    } else if (*survey) {
      emit_survey(parse_field(sv_field), split_checkpoints(sv_checkpoints), sv_format,
                  threads, out);
    } else if (*hits) {
      emit_hits(parse_field(ht_field), ht_x, ht_m, ht_format, threads, out);
    } else if (*hcount) {
      emit_hcount(hc_x, hc_y, hc_z, hc_format, threads, out);
    } else if (*optimal) {
      emit_optimal(op_limit, op_format, out);
    } else if (*efficient) {
      emit_efficient(ef_limit, split_checkpoints(ef_checkpoints), ef_format, threads, out);
    } else if (*verify) {
      const SuiteReport report = verify_suite(vf_suite, vf_limit);
      out << format_report(report) << "\n";
      return report.pass ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace cycdeg::cli
