#include "commands.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "wreath/decomp.hpp"
#include "wreath/exact_linalg.hpp"
#include "wreath/lr.hpp"
#include "wreath/verify.hpp"

namespace wreath::cli {

using nlohmann::ordered_json;

namespace {



std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

ordered_json big_integer(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

}  // namespace

std::string kmatrix(const RunConfig& cfg) {
  const auto k = wreath::decomposition_matrix(cfg.p, cfg.w);
  std::ostringstream os;
  if (cfg.format == "csv") {
    os << "row,col,value\n";
    for (Eigen::Index r = 0; r < k.entries.outerSize(); ++r)
      for (wreath::SparseIntMatrix::InnerIterator it(k.entries, r); it; ++it)
        os << csv_field(k.rows[it.row()].to_string()) << ',' << csv_field(k.cols[it.col()].to_string())
           << ',' << it.value() << '\n';
    return os.str();
  }
  ordered_json j;
  j["p"] = cfg.p;
  j["w"] = cfg.w;
  j["rows"] = ordered_json::array();
  for (const auto& a : k.rows) j["rows"].push_back(a.to_string());
  j["cols"] = ordered_json::array();
  for (const auto& g : k.cols) j["cols"].push_back(g.to_string());
  j["entries"] = ordered_json::array();
  for (Eigen::Index r = 0; r < k.entries.outerSize(); ++r)
    for (wreath::SparseIntMatrix::InnerIterator it(k.entries, r); it; ++it)
      j["entries"].push_back({it.row(), it.col(), it.value()});
  return j.dump(2) + "\n";
}

std::string gram(const RunConfig& cfg) {
  const auto g = wreath::gram_matrix(cfg.p, cfg.w);
  const auto n = g.entries.rows();
  std::ostringstream os;
  if (cfg.format == "csv") {
    os << "row,col,value\n";
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index c = 0; c < n; ++c)
        if (g.entries(r, c) != 0)
          os << csv_field(g.labels[r].to_string()) << ',' << csv_field(g.labels[c].to_string())
             << ',' << g.entries(r, c) << '\n';
    return os.str();
  }
  std::vector<Eigen::Index> basic;
  for (Eigen::Index i = 0; i < n; ++i)
    if (g.labels[i].middle().empty()) basic.push_back(i);
  bool unit = true;
  for (auto a : basic)
    for (auto b : basic) unit = unit && g.entries(a, b) == (a == b ? 1 : 0);

  ordered_json j;
  j["p"] = cfg.p;
  j["w"] = cfg.w;
  j["rows"] = ordered_json::array();
  for (const auto& l : g.labels) j["rows"].push_back(l.to_string());
  j["cols"] = j["rows"];
  j["entries"] = ordered_json::array();
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      if (g.entries(r, c) != 0) j["entries"].push_back({r, c, g.entries(r, c)});
  j["symmetric"] = g.entries == g.entries.transpose();
  j["determinant"] = big_integer(wreath::exact_determinant(g.entries));
  j["basic_submatrix_is_identity"] = unit;
  j["note"] =
      "entries are <Res chi^g1, Res chi^g2> over Z_{p-1} wr S_w; the basic-set coefficient "
      "n_{lambda,mu} equals a signed entry after relabelling lambda -> lambda~";
  return j.dump(2) + "\n";
}

std::string partitions_report(const RunConfig& cfg, bool blocks_view) {
  const auto blocks = wreath::block_partition(cfg.n, cfg.p);
  const int r = wreath::middle_index(cfg.p);
  std::ostringstream os;
  if (cfg.format == "csv") {
    os << "partition,core,weight,quotient,basic\n";
    for (const auto& lambda : wreath::generate_partitions(cfg.n)) {
      const auto res = wreath::p_core_and_quotient(lambda, cfg.p);
      os << csv_field(lambda.to_string()) << ',' << csv_field(res.core.to_string()) << ','
         << res.weight << ',' << csv_field(res.quotient.to_string()) << ','
         << (res.quotient[r - 1].empty() ? "true" : "false") << '\n';
    }
    return os.str();
  }
  ordered_json j;
  j["n"] = cfg.n;
  j["p"] = cfg.p;
  j["partitions"] = ordered_json::array();
  std::size_t basic_count = 0;
  for (const auto& lambda : wreath::generate_partitions(cfg.n)) {
    const auto res = wreath::p_core_and_quotient(lambda, cfg.p);
    const bool basic = res.quotient[r - 1].empty();
    basic_count += basic;
    if (!blocks_view && !basic) continue;
    j["partitions"].push_back({{"partition", lambda.to_string()},
                               {"core", res.core.to_string()},
                               {"weight", res.weight},
                               {"quotient", res.quotient.to_string()},
                               {"basic", basic}});
  }
  j["basic_set_size"] = basic_count;
  if (blocks_view) {
    j["blocks"] = ordered_json::array();
    for (const auto& [key, members] : blocks) {
      ordered_json b;
      b["core"] = key.core.to_string();
      b["weight"] = key.weight;
      b["members"] = ordered_json::array();
      for (const auto& m : members) b["members"].push_back(m.to_string());
      j["blocks"].push_back(std::move(b));
    }
  }
  return j.dump(2) + "\n";
}

std::string lr(const RunConfig& cfg) {
  const auto outer = wreath::parse_partition(cfg.outer);
  const auto inner = wreath::parse_partition(cfg.inner);
  const auto content = wreath::parse_partition(cfg.content);
  const auto c = wreath::lr_coefficient(outer, inner, content);
  if (cfg.format == "csv") return "outer,inner,content,value\n" + csv_field(outer.to_string()) + ',' +
                                  csv_field(inner.to_string()) + ',' +
                                  csv_field(content.to_string()) + ',' + std::to_string(c) + '\n';
  ordered_json j{{"outer", outer.to_string()},
                 {"inner", inner.to_string()},
                 {"content", content.to_string()},
                 {"value", c}};
  return j.dump(2) + "\n";
}

std::uint64_t element_guard() {
  if (const char* env = std::getenv("WREATH_GUARD_ELEMS")) return std::stoull(env);
  return wreath::oracle::kDefaultElementGuard;
}

std::string verify(const RunConfig& cfg, bool& ok) {
  using namespace wreath::oracle;
  const auto records = run_verification(cfg.p, cfg.w, element_guard());
  ok = all_passed(records);
  std::ostringstream os;
  if (cfg.format == "csv") {
    os << "claim,parameters,expected,computed,status\n";
    for (const auto& r : records)
      os << csv_field(r.claim) << ',' << csv_field(r.parameters) << ',' << csv_field(r.expected)
         << ',' << csv_field(r.computed) << ',' << to_string(r.outcome) << '\n';
    return os.str();
  }
  ordered_json j;
  j["p"] = cfg.p;
  j["w"] = cfg.w;
  j["primitive_root"] = cfg.p <= kMaxOraclePrime ? smallest_primitive_root(cfg.p) : 0;
  j["records"] = ordered_json::array();
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& r : records) {
    ++counts[static_cast<int>(r.outcome)];
    j["records"].push_back({{"claim", r.claim},
                            {"parameters", r.parameters},
                            {"expected", r.expected},
                            {"computed", r.computed},
                            {"status", to_string(r.outcome)}});
  }
  j["passed"] = counts[0];
  j["failed"] = counts[1];
  j["skipped"] = counts[2];
  j["ok"] = ok;
  return j.dump(2) + "\n";
}

void check_config(const RunConfig& cfg, bool uses_w, bool uses_n) {
  wreath::require_odd_prime(cfg.p);
  if (uses_w && (cfg.w < 0 || cfg.w > kMaxWeight))
    throw std::invalid_argument("--w must lie in [0, " + std::to_string(kMaxWeight) + "]");
  if (uses_n && (cfg.n < 1 || cfg.n > kMaxN))
    throw std::invalid_argument("--n must lie in [1, " + std::to_string(kMaxN) + "]");
}

}  // namespace wreath::cli
