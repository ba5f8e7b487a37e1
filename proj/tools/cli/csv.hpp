// CSV emission for parameter sweeps. Numbers use 12 significant digits in
// the C locale, so identical runs produce byte-identical files.
#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace circlight::cli {

/// Shortest "%.12g"-style rendering; -0 prints as 0.
std::string format_number(double value);

struct Decomposition {
  double b = 0.0;
  double s = 0.0;
};

struct QmaxColumns {
  double e_rics_qmax = 0.0;
  double n1 = 0.0;
  double n2 = 0.0;
};

struct SweepRecord {
  double alpha0 = 0.0;
  int n = 1;
  std::string q;  // integer index, or a state label such as "kerr"
  double e_bits = 0.0;
  std::string method;
  std::optional<Decomposition> decomposition;
  std::optional<QmaxColumns> qmax;
};

struct SweepTable {
  bool with_decomposition = false;
  bool with_qmax = false;
  std::vector<SweepRecord> rows;
};

/// Header `alpha0,N,q,E_bits,method[,B,S,BplusS][,E_rics_qmax,N1,N2]`
/// followed by one line per record. Throws std::logic_error when a record
/// lacks a column the table declares or carries a non-finite/negative E.
void write_csv(std::ostream& out, const SweepTable& table);

}  // namespace circlight::cli
