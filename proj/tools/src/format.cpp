#include "drharm_cli/format.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "drharm/errors.hpp"

namespace drharm::cli {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_real(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size() ||
      !std::isfinite(v)) {
    throw_domain("malformed number '" + std::string(text) + "'");
  }
  return v;
}

std::complex<double> parse_complex(std::string_view text) {
  if (text.empty()) throw_domain("empty complex number");
  if (text.back() != 'i') return {parse_real(text), 0.0};
  text.remove_suffix(1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = text.size(); k-- > 1;) {
    if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string_view re = split == std::string_view::npos ? std::string_view{} : text.substr(0, split);
  std::string_view im = split == std::string_view::npos ? text : text.substr(split);
  double imag = 1.0;
  if (im.empty() || im == "+") {
    imag = 1.0;
  } else if (im == "-") {
    imag = -1.0;
  } else {
    imag = parse_real(im);
  }
  return {re.empty() ? 0.0 : parse_real(re), imag};
}

std::vector<double> expand_grid(const std::vector<std::string>& tokens) {
  std::vector<double> out;
  for (const std::string& tok : tokens) {
    const auto c1 = tok.find(':');
    if (c1 == std::string::npos) {
      out.push_back(parse_real(tok));
      continue;
    }
    const auto c2 = tok.find(':', c1 + 1);
    if (c2 == std::string::npos) throw_domain("grid '" + tok + "' must read start:stop:step");
    const double a = parse_real(std::string_view(tok).substr(0, c1));
    const double b = parse_real(std::string_view(tok).substr(c1 + 1, c2 - c1 - 1));
    const double step = parse_real(std::string_view(tok).substr(c2 + 1));
    if (!(step > 0.0) || b < a) throw_domain("grid '" + tok + "' needs step > 0 and stop >= start");
    const long n = static_cast<long>(std::floor((b - a) / step + 1e-9));
    if (n > 1000000) throw_domain("grid '" + tok + "' has too many points");
    for (long i = 0; i <= n; ++i) out.push_back(a + static_cast<double>(i) * step);
  }
  return out;
}

}  // namespace drharm::cli
