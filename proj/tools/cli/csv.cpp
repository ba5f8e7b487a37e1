#include "cli/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace circlight::cli {

std::string format_number(double value) {
  if (value == 0.0) return "0";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 12);
  if (res.ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return {buf.data(), res.ptr};
}

void write_csv(std::ostream& out, const SweepTable& table) {
  out << "alpha0,N,q,E_bits,method";
  if (table.with_decomposition) out << ",B,S,BplusS";
  if (table.with_qmax) out << ",E_rics_qmax,N1,N2";
  out << '\n';
  for (const auto& r : table.rows) {
    if (!std::isfinite(r.e_bits) || r.e_bits < -1e-9) {
      throw std::logic_error("sweep produced an invalid entanglement value");
    }
    out << format_number(r.alpha0) << ',' << r.n << ',' << r.q << ',' << format_number(r.e_bits) << ','
        << r.method;
    if (table.with_decomposition) {
      if (!r.decomposition) throw std::logic_error("missing B/S columns");
      const auto& d = *r.decomposition;
      out << ',' << format_number(d.b) << ',' << format_number(d.s) << ',' << format_number(d.b + d.s);
    }
    if (table.with_qmax) {
      if (!r.qmax) throw std::logic_error("missing q-max columns");
      const auto& m = *r.qmax;
      out << ',' << format_number(m.e_rics_qmax) << ',' << format_number(m.n1) << ',' << format_number(m.n2);
    }
    out << '\n';
  }
}

}  // namespace circlight::cli
