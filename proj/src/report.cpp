#include "pluripot/report.hpp"

#include <cmath>
#include <cstdio>

namespace pluripot {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_complex(cplx z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

std::string format_vector(const CVec& z) {
  std::string s;
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    if (j) s += ';';
    s += format_complex(z(j));
  }
  return s;
}

namespace {

void emit(const nlohmann::json& j, int indent, int level, std::string& out) {
  const std::string pad = indent > 0 ? std::string(std::size_t(indent) * (level + 1), ' ') : "";
  const std::string pad_close = indent > 0 ? std::string(std::size_t(indent) * level, ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      out += nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) {
          out += ",";
          out += nl;
        }
        first = false;
        out += pad;
        out += nlohmann::json(it.key()).dump();
        out += indent > 0 ? ": " : ":";
        emit(it.value(), indent, level + 1, out);
      }
      out += nl;
      out += pad_close;
      out += "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[";
      out += nl;
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) {
          out += ",";
          out += nl;
        }
        out += pad;
        emit(j[i], indent, level + 1, out);
      }
      out += nl;
      out += pad_close;
      out += "]";
      return;
    }
    case nlohmann::json::value_t::number_float: {
      const double x = j.get<double>();
      if (std::isfinite(x)) out += format_double(x);
      else out += "\"" + format_double(x) + "\"";
      return;
    }
    default: out += j.dump();
  }
}

}  // namespace

std::string dump_json(const nlohmann::json& j, int indent) {
  std::string out;
  emit(j, indent, 0, out);
  return out;
}

nlohmann::json report_bundle(const std::string& name, const std::vector<VerificationReport>& reports,
                             bool with_details) {
  nlohmann::json j;
  j["schema"] = kSchemaVersion;
  j["suite"] = name;
  auto arr = nlohmann::json::array();
  bool ok = true;
  for (const auto& r : reports) {
    arr.push_back(to_json(r, with_details));
    ok = ok && r.passed();
  }
  j["reports"] = arr;
  j["passed"] = ok;
  return j;
}

}  // namespace pluripot
