#include "cli/descriptor.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace circlight::cli {

namespace {

using nlohmann::json;

Complex parse_complex(const json& j, std::string_view what) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw DescriptorError(std::string(what) + " must be a number or a [re, im] pair");
}

int parse_int(const json& obj, const char* key) {
  if (!obj.contains(key)) throw DescriptorError(std::string("missing field \"") + key + "\"");
  const auto& v = obj.at(key);
  if (!v.is_number_integer()) throw DescriptorError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::string read_source(std::string_view text_or_path) {
  const auto first = text_or_path.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text_or_path[first] == '{') return std::string(text_or_path);
  std::ifstream in{std::string(text_or_path)};
  if (!in) throw DescriptorError("cannot open state descriptor file: " + std::string(text_or_path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string_view kind_name(StateKind kind) noexcept {
  switch (kind) {
    case StateKind::Rics:
      return "rics";
    case StateKind::Kerr:
      return "kerr";
    case StateKind::Custom:
      return "custom";
  }
  return "unknown";
}

StateDescriptor parse_descriptor(std::string_view text_or_path) {
  json j;
  try {
    j = json::parse(read_source(text_or_path));
  } catch (const json::parse_error& e) {
    throw DescriptorError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw DescriptorError("state descriptor must be a JSON object");
  if (!j.contains("kind") || !j["kind"].is_string()) throw DescriptorError("missing string field \"kind\"");

  StateDescriptor d;
  const auto kind = j["kind"].get<std::string>();
  if (kind == "rics") {
    d.kind = StateKind::Rics;
  } else if (kind == "kerr") {
    d.kind = StateKind::Kerr;
  } else if (kind == "custom") {
    d.kind = StateKind::Custom;
  } else {
    throw DescriptorError("unknown state kind \"" + kind + "\"");
  }

  d.n = parse_int(j, "N");
  if (d.n < 1) throw DescriptorError("\"N\" must be at least 1");
  if (!j.contains("alpha0")) throw DescriptorError("missing field \"alpha0\"");
  d.alpha0 = parse_complex(j["alpha0"], "alpha0");

  if (d.kind == StateKind::Rics) d.q = parse_int(j, "q");
  if (d.kind == StateKind::Custom) {
    if (!j.contains("coeffs") || !j["coeffs"].is_array()) throw DescriptorError("custom state needs a \"coeffs\" array");
    const auto& arr = j["coeffs"];
    if (arr.size() != static_cast<std::size_t>(d.n)) throw DescriptorError("\"coeffs\" must have N entries");
    d.coeffs = CVector(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) d.coeffs[i] = parse_complex(arr[i], "coeffs entry");
  }
  return d;
}

CircularState build_state(const StateDescriptor& d) {
  switch (d.kind) {
    case StateKind::Rics:
      return rics_coefficients({d.n, d.q, d.alpha0});
    case StateKind::Kerr:
      return kerr_state(d.n, d.alpha0);
    case StateKind::Custom:
      return CircularState::from_coefficients(d.alpha0, d.coeffs);
  }
  throw DescriptorError("unknown state kind");
}

std::optional<RicsLabel> as_rics(const CircularState& s) {
  if (s.alpha0() == Complex{}) return std::nullopt;
  const auto& ct = s.spectral();
  double peak = 0.0;
  for (const auto& z : ct) peak = std::max(peak, std::abs(z));
  int support = -1;
  for (int k = 0; k < s.size(); ++k) {
    if (std::abs(ct[static_cast<std::size_t>(k)]) > 1e-12 * peak) {
      if (support >= 0) return std::nullopt;
      support = k;
    }
  }
  if (support < 0) return std::nullopt;
  return RicsLabel{s.size(), support, s.alpha0()};
}

}  // namespace circlight::cli
