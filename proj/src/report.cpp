#include "operadix/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

namespace operadix {

namespace {

constexpr std::array<std::string_view, 9> kComponentHeaders{
    "mu^1_12", "mu^2_12", "mu^3_12", "mu^1_23", "mu^2_23",
    "mu^3_23", "mu^1_31", "mu^2_31", "mu^3_31"};

std::string format_general(double v, int digits) {
  if (v == 0.0) return "0";  // also folds -0
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, digits);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

void write_row(std::ostringstream& os, std::span<const std::string> cells) {
  os << '|';
  for (const auto& c : cells) os << ' ' << c << " |";
  os << '\n';
}

void write_separator(std::ostringstream& os, std::size_t columns) {
  os << '|';
  for (std::size_t n = 0; n < columns; ++n) os << "---|";
  os << '\n';
}

}  // namespace

std::string format_17(double v) { return format_general(v, 17); }
std::string format_6(double v) { return format_general(v, 6); }

json to_json(const MultiOp& op) {
  json coeffs = json::array();
  const std::size_t d = op.dim();
  const std::size_t n = op.arity();
  auto c = op.coeffs();
  std::vector<std::size_t> in(n, 0);
  for (std::size_t flat = 0; flat < c.size(); ++flat) {
    if (c[flat] == 0.0) continue;
    std::size_t rest = flat;
    for (std::size_t k = n; k-- > 0;) {
      in[k] = rest % d;
      rest /= d;
    }
    json js = json::array();
    for (std::size_t k = 0; k < n; ++k) js.push_back(in[k] + 1);
    coeffs.push_back({{"i", rest + 1}, {"j", js}, {"v", c[flat]}});
  }
  return {{"dim", d}, {"arity", n}, {"coeffs", coeffs}};
}

MultiOp multi_op_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("arity") || !j.contains("coeffs")) {
    throw ShapeError("MultiOp JSON needs dim, arity and coeffs");
  }
  const auto d = j.at("dim").get<long long>();
  const auto n = j.at("arity").get<long long>();
  if (d <= 0) throw ShapeError("MultiOp JSON: dim must be positive");
  if (n < 0) throw ShapeError("MultiOp JSON: arity must be non-negative");
  MultiOp op(static_cast<std::size_t>(d), static_cast<std::size_t>(n));
  const json& entries = j.at("coeffs");
  if (!entries.is_array()) throw ShapeError("MultiOp JSON: coeffs must be an array");
  std::vector<std::size_t> in(static_cast<std::size_t>(n));
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const json& entry = entries[e];
    const auto i = entry.at("i").get<long long>();
    const json& js = entry.at("j");
    if (!js.is_array() || js.size() != static_cast<std::size_t>(n)) {
      throw ShapeError("MultiOp JSON: entry has wrong number of input indices", e);
    }
    if (i < 1 || i > d) throw ShapeError("MultiOp JSON: output index out of range", e);
    for (std::size_t k = 0; k < in.size(); ++k) {
      const auto jk = js[k].get<long long>();
      if (jk < 1 || jk > d) throw ShapeError("MultiOp JSON: input index out of range", e);
      in[k] = static_cast<std::size_t>(jk - 1);
    }
    const double v = entry.at("v").get<double>();
    if (!std::isfinite(v)) throw ShapeError("MultiOp JSON: non-finite coefficient", e);
    op.coeffs()[op.offset(static_cast<std::size_t>(i - 1), in)] = v;
  }
  return op;
}

json catalog_json(const LieConstants& lie) {
  json j = to_json(lie.mu0);
  j["bianchi"] = std::string(tag_name(lie.type.tag()));
  if (lie.type.a()) j["a"] = *lie.type.a();
  return j;
}

std::string trajectory_csv(const OscParams& params, std::span<const double> times) {
  std::ostringstream os;
  os << "t,q,p,H,a_plus,a_minus\n";
  for (double t : times) {
    const OscState s = flow(params, t);
    const AuxPair aux = aux_smooth(params, t);
    os << format_17(t) << ',' << format_17(s.q) << ',' << format_17(s.p) << ','
       << format_17(hamiltonian(s, params.omega)) << ',' << format_17(aux.a_plus) << ','
       << format_17(aux.a_minus) << '\n';
  }
  return os.str();
}

std::string table1_markdown() {
  std::ostringstream os;
  std::vector<std::string> header{"Bianchi type", "alpha", "n^1", "n^2", "n^3"};
  header.insert(header.end(), kComponentHeaders.begin(), kComponentHeaders.end());
  write_row(os, header);
  write_separator(os, header.size());
  for (const Table1Row& row : table1()) {
    std::vector<std::string> cells{std::string(display_name(row.tag)), row.alpha.symbol(),
                                   row.n1.symbol(), row.n2.symbol(), row.n3.symbol()};
    for (const AffineEntry& e : row.mu) cells.push_back(e.symbol());
    write_row(os, cells);
  }
  return os.str();
}

std::string table2_markdown() {
  std::ostringstream os;
  std::vector<std::string> header{"Deformed Bianchi type"};
  header.insert(header.end(), kComponentHeaders.begin(), kComponentHeaders.end());
  write_row(os, header);
  write_separator(os, header.size());
  for (BianchiTag tag : kAllTags) {
    std::vector<std::string> cells{std::string(display_name(tag)) + "^t"};
    for (std::string_view s : table2_symbols(tag)) cells.emplace_back(s);
    write_row(os, cells);
  }
  return os.str();
}

std::string deformation_markdown(const BianchiType& type,
                                 std::span<const TrajectorySample> samples) {
  std::ostringstream os;
  os << "### " << type.label() << "\n\n";
  std::vector<std::string> header{"t", "q", "p"};
  header.insert(header.end(), kComponentHeaders.begin(), kComponentHeaders.end());
  write_row(os, header);
  write_separator(os, header.size());
  for (const TrajectorySample& s : samples) {
    std::vector<std::string> cells{format_6(s.t), format_6(s.state.q), format_6(s.state.p)};
    for (double v : s.mu) cells.push_back(format_6(v));
    write_row(os, cells);
  }
  return os.str();
}

}  // namespace operadix
