#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "osc/dense.hpp"
#include "osc/field.hpp"
#include "osc/oscillator.hpp"
#include "osc/spectral.hpp"
#include "osc/tori.hpp"
#include "osc/weil.hpp"

namespace osc {

// Malformed or unwritable files: mapped to the usage/parse exit code by the
// CLI, as opposed to numeric-consistency failures.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All numeric output is serialized with 17 significant digits so files are
// byte-identical across repeated runs on the same platform.
inline std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline const char* torus_name(MaximalTorus::Kind kind) {
  switch (kind) {
    case MaximalTorus::Kind::kStandard: return "A";
    case MaximalTorus::Kind::kWeylCentralizer: return "Tw";
    default: return "ns";
  }
}

inline MaximalTorus::Kind torus_kind_from_name(const std::string& name) {
  if (name == "A") return MaximalTorus::Kind::kStandard;
  if (name == "Tw") return MaximalTorus::Kind::kWeylCentralizer;
  if (name == "ns") return MaximalTorus::Kind::kNonsplit;
  throw ParseError("unknown torus name '" + name +
                           "' (expected Tw, A or ns)");
}

inline MaximalTorus build_torus(const FieldContext& F,
                                MaximalTorus::Kind kind) {
  switch (kind) {
    case MaximalTorus::Kind::kStandard: return MaximalTorus::standard(F);
    case MaximalTorus::Kind::kWeylCentralizer:
      return MaximalTorus::weyl_centralizer(F);
    default: return MaximalTorus::nonsplit(F);
  }
}

// Self-describing text format for a state vector: {"p": ..., "re": [...],
// "im": [...]}.
struct VectorFile {
  std::uint64_t p{0};
  StateVector values;
};

namespace io_detail {

inline nlohmann::json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("parse error in '" + path + "': " + e.what());
  }
  return j;
}

inline std::uint64_t read_prime_field(const nlohmann::json& j,
                                      const std::string& path) {
  if (!j.contains("p") || !j["p"].is_number_unsigned())
    throw ParseError("parse error in '" + path +
                             "': missing or invalid field 'p'");
  const std::uint64_t p = j["p"].get<std::uint64_t>();
  if (p < 3 || !detail::is_prime(p))
    throw ParseError("parse error in '" + path +
                             "': field 'p' is not an odd prime");
  return p;
}

inline std::vector<double> read_real_array(const nlohmann::json& j,
                                           const char* key, std::size_t len,
                                           const std::string& path) {
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != len)
    throw ParseError("parse error in '" + path + "': field '" +
                             key + "' must be an array of length " +
                             std::to_string(len));
  std::vector<double> out;
  out.reserve(len);
  for (const auto& v : j[key]) {
    if (!v.is_number())
      throw ParseError("parse error in '" + path + "': field '" +
                               key + "' has a non-numeric entry");
    out.push_back(v.get<double>());
  }
  return out;
}

inline void write_real_array(std::ostream& os, const char* key,
                             const Eigen::VectorXcd& v, bool real_part) {
  os << '"' << key << "\": [";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << format_g17(real_part ? v[i].real() : v[i].imag());
  }
  os << ']';
}

inline void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << body;
}

}  // namespace io_detail

inline VectorFile load_vector_file(const std::string& path) {
  const nlohmann::json j = io_detail::parse_file(path);
  VectorFile vf;
  vf.p = io_detail::read_prime_field(j, path);
  const auto re = io_detail::read_real_array(j, "re", vf.p, path);
  const auto im = io_detail::read_real_array(j, "im", vf.p, path);
  vf.values.resize(vf.p);
  for (std::size_t i = 0; i < vf.p; ++i) vf.values[i] = cplx{re[i], im[i]};
  return vf;
}

inline void save_vector_file(const std::string& path, const VectorFile& vf) {
  std::ostringstream os;
  os << "{\n  \"p\": " << vf.p << ",\n  ";
  io_detail::write_real_array(os, "re", vf.values, true);
  os << ",\n  ";
  io_detail::write_real_array(os, "im", vf.values, false);
  os << "\n}\n";
  io_detail::write_file(path, os.str());
}

// Coefficient file: labels plus complex values, tagged with the torus and the
// transform mode that produced it.
struct CoefficientFile {
  std::uint64_t p{0};
  std::string torus;
  std::string mode;  // "dot", "full" or "fot"
  CoefficientVector coeffs;
};

inline void save_coefficient_file(const std::string& path,
                                  const CoefficientFile& cf) {
  std::ostringstream os;
  os << "{\n  \"p\": " << cf.p << ",\n  \"torus\": \"" << cf.torus
     << "\",\n  \"mode\": \"" << cf.mode << "\",\n  \"labels\": [";
  for (std::size_t i = 0; i < cf.coeffs.labels.size(); ++i) {
    if (i) os << ", ";
    os << cf.coeffs.labels[i];
  }
  os << "],\n  ";
  io_detail::write_real_array(os, "re", cf.coeffs.values, true);
  os << ",\n  ";
  io_detail::write_real_array(os, "im", cf.coeffs.values, false);
  os << "\n}\n";
  io_detail::write_file(path, os.str());
}

inline CoefficientFile load_coefficient_file(const std::string& path) {
  const nlohmann::json j = io_detail::parse_file(path);
  CoefficientFile cf;
  cf.p = io_detail::read_prime_field(j, path);
  if (!j.contains("labels") || !j["labels"].is_array())
    throw ParseError("parse error in '" + path +
                             "': missing or invalid field 'labels'");
  const std::size_t n = j["labels"].size();
  cf.coeffs.labels.reserve(n);
  for (const auto& v : j["labels"]) {
    if (!v.is_number_unsigned())
      throw ParseError("parse error in '" + path +
                               "': field 'labels' has a non-integer entry");
    cf.coeffs.labels.push_back(v.get<std::size_t>());
  }
  cf.torus = j.value("torus", std::string{});
  cf.mode = j.value("mode", std::string{});
  const auto re = io_detail::read_real_array(j, "re", n, path);
  const auto im = io_detail::read_real_array(j, "im", n, path);
  cf.coeffs.values.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    cf.coeffs.values[i] = cplx{re[i], im[i]};
  return cf;
}

// Basis file: one basis vector per entry of "vectors", labeled as in
// full_analysis, in analysis order.  The companion metadata file lists, per
// character in the support: the index k, the character value at the stored
// torus generator, dim H_chi, and for the Tw torus the DFT eigenvalue of the
// corresponding basis vectors.
inline void save_basis_file(const std::string& path,
                            const SpectralBasis& basis) {
  const std::size_t n = basis.torus().order();
  std::ostringstream os;
  os << "{\n  \"p\": " << basis.dimension() << ",\n  \"torus\": \""
     << torus_name(basis.torus().kind()) << "\",\n  \"vectors\": [\n";
  bool first = true;
  for (const SpectralEntry& entry : basis.entries()) {
    for (std::size_t v = 0; v < entry.vectors.size(); ++v) {
      if (!first) os << ",\n";
      first = false;
      os << "    {\"label\": " << entry.k + v * n << ", ";
      io_detail::write_real_array(os, "re", entry.vectors[v], true);
      os << ", ";
      io_detail::write_real_array(os, "im", entry.vectors[v], false);
      os << '}';
    }
  }
  os << "\n  ]\n}\n";
  io_detail::write_file(path, os.str());
}

inline void save_basis_metadata_file(const std::string& path,
                                     const FieldContext& F,
                                     const SpectralBasis& basis) {
  const MaximalTorus& T = basis.torus();
  const bool is_tw = T.kind() == MaximalTorus::Kind::kWeylCentralizer;
  std::size_t jw = 0;
  cplx C;
  if (is_tw) {
    jw = T.dlog(weyl_element(F));
    C = dft_constant(F);
  }
  const SpMatrix& g = T.generator();
  std::ostringstream os;
  os << "{\n  \"p\": " << F.p() << ",\n  \"torus\": \""
     << torus_name(T.kind()) << "\",\n  \"order\": " << T.order()
     << ",\n  \"split\": " << (T.split() ? "true" : "false")
     << ",\n  \"generator\": [" << g.a << ", " << g.b << ", " << g.c << ", "
     << g.d << "],\n"
     << "  \"phase_convention\": \"first coordinate of magnitude > 1e-8 is "
        "real positive; within a 2-dimensional character space the two "
        "vectors come from projected deltas in index order\",\n"
     << "  \"entries\": [\n";
  bool first = true;
  for (const SpectralEntry& entry : basis.entries()) {
    if (!first) os << ",\n";
    first = false;
    const cplx chi = T.character(entry.k, 1);
    os << "    {\"k\": " << entry.k << ", \"character_re\": "
       << format_g17(chi.real()) << ", \"character_im\": "
       << format_g17(chi.imag()) << ", \"dim\": " << entry.vectors.size();
    if (is_tw) {
      const cplx ev = C * T.character(entry.k, jw);
      os << ", \"dft_eigenvalue_re\": " << format_g17(ev.real())
         << ", \"dft_eigenvalue_im\": " << format_g17(ev.imag());
    }
    os << '}';
  }
  os << "\n  ]\n}\n";
  io_detail::write_file(path, os.str());
}

}  // namespace osc
