#include "zosc/zeros.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "zosc/common.hpp"

namespace zosc {

namespace {

std::string shortest_text(double x) {
  std::array<char, 64> buf{};
  const auto r = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return {buf.data(), r.ptr};
}

void validate(const std::vector<double>& g, const std::vector<int>& m) {
  if (g.empty()) throw DataError("zero table is empty");
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!(g[i] > 0.0) || !std::isfinite(g[i]))
      throw DataError("ordinate #" + std::to_string(i + 1) + " is not a positive number");
    if (i > 0 && !(g[i] > g[i - 1]))
      throw DataError("ordinate #" + std::to_string(i + 1) + " is not strictly increasing");
    if (m[i] < 1) throw DataError("multiplicity #" + std::to_string(i + 1) + " is below 1");
  }
  if (g.front() < 14.13 || g.front() > 14.14)
    throw DataError("first ordinate " + shortest_text(g.front()) +
                    " is not the first zeta zero (expected within [14.13, 14.14])");
}

long long count_unchecked(const std::vector<double>& g, const std::vector<int>& m, double T) {
  const auto end = std::upper_bound(g.begin(), g.end(), T);
  long long c = 0;
  for (auto it = g.begin(); it != end; ++it) c += m[static_cast<std::size_t>(it - g.begin())];
  return c;
}

void check_counting(const std::vector<double>& g, const std::vector<int>& m) {
  const double top = g.back();
  for (double T : {50.0, 100.0, 500.0, top}) {
    if (T > top) continue;
    const double est = riemann_von_mangoldt(T);
    const auto got = static_cast<double>(count_unchecked(g, m, T));
    if (std::abs(got - est) > 2.0) {
      std::ostringstream os;
      os << "zero count below T=" << T << " is " << got
         << ", Riemann-von Mangoldt estimate is " << est << " (tolerance 2)";
      throw DataError(os.str());
    }
  }
}

}  // namespace

double riemann_von_mangoldt(double T) {
  const double x = T / (2.0 * kPi);
  return x * std::log(x / std::exp(1.0)) + 0.875;
}

ZeroTable ZeroTable::from_ordinates(std::vector<double> gammas, std::vector<int> multiplicities,
                                    std::string source, std::vector<std::string> text) {
  if (multiplicities.empty()) multiplicities.assign(gammas.size(), 1);
  if (multiplicities.size() != gammas.size())
    throw DataError("multiplicity column length differs from ordinate count");
  if (!text.empty() && text.size() != gammas.size())
    throw DataError("ordinate text length differs from ordinate count");
  validate(gammas, multiplicities);
  check_counting(gammas, multiplicities);
  if (text.empty()) {
    text.reserve(gammas.size());
    for (double g : gammas) text.push_back(shortest_text(g));
  }
  ZeroTable t;
  t.gammas_ = std::move(gammas);
  t.multiplicities_ = std::move(multiplicities);
  t.text_ = std::move(text);
  t.source_ = std::move(source);
  return t;
}

void ZeroTable::write(std::ostream& out) const {
  const bool with_mult =
      std::any_of(multiplicities_.begin(), multiplicities_.end(), [](int m) { return m != 1; });
  if (!source_.empty()) out << "# source: " << source_ << '\n';
  for (std::size_t i = 0; i < gammas_.size(); ++i) {
    out << text_[i];
    if (with_mult) out << ' ' << multiplicities_[i];
    out << '\n';
  }
}

ZeroTable parse_zeros(std::istream& in, const std::string& source,
                      std::optional<std::size_t> limit) {
  if (limit && *limit == 0) throw DomainError("zero table limit must be positive");
  std::vector<double> gammas;
  std::vector<int> mult;
  std::vector<std::string> text;
  std::string line;
  std::size_t line_no = 0;
  double previous = 0.0;
  while (std::getline(in, line)) {
    ++line_no;
    if (limit && gammas.size() >= *limit) break;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first) || first.front() == '#') continue;
    const auto where = [&] { return source + ":" + std::to_string(line_no) + ": "; };
    double value = 0.0;
    const auto r = std::from_chars(first.data(), first.data() + first.size(), value);
    if (r.ec != std::errc() || r.ptr != first.data() + first.size())
      throw DataError(where() + "cannot parse ordinate '" + first + "'");
    if (!(value > 0.0)) throw DataError(where() + "ordinate must be positive");
    if (!gammas.empty() && !(value > previous))
      throw DataError(where() + "ordinates must be strictly increasing (" + first +
                      " follows " + text.back() + ")");
    int m = 1;
    std::string second;
    if (fields >> second) {
      const auto rm = std::from_chars(second.data(), second.data() + second.size(), m);
      if (rm.ec != std::errc() || rm.ptr != second.data() + second.size() || m < 1)
        throw DataError(where() + "multiplicity must be a positive integer");
    }
    std::string extra;
    if (fields >> extra) throw DataError(where() + "unexpected extra column");
    gammas.push_back(value);
    mult.push_back(m);
    text.push_back(first);
    previous = value;
  }
  if (gammas.empty()) throw DataError(source + ": zero table is empty");
  return ZeroTable::from_ordinates(std::move(gammas), std::move(mult), source, std::move(text));
}

ZeroTable load_zeros(const std::filesystem::path& path, std::optional<std::size_t> limit) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open zero table " + path.string());
  return parse_zeros(in, path.string(), limit);
}

long long count_below(const ZeroTable& table, double T) {
  if (!(T <= table.max_gamma()))
    throw DomainError("T=" + shortest_text(T) + " beyond table coverage (max gamma " +
                      shortest_text(table.max_gamma()) + ")");
  const auto g = table.gammas();
  const auto end = std::upper_bound(g.begin(), g.end(), T);
  long long c = 0;
  for (auto it = g.begin(); it != end; ++it)
    c += table.multiplicity(static_cast<std::size_t>(it - g.begin()));
  return c;
}

std::filesystem::path resolve_zeros_path(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("ZETA_ZEROS_PATH"); env != nullptr && *env != '\0')
    return env;
  throw DomainError("no zero table: pass --zeros <path> or set ZETA_ZEROS_PATH");
}

}  // namespace zosc
