#pragma once

#include "oracle.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

namespace hopfdiag {

using json = nlohmann::json;

// Bundle files: {"name", "dim", "field": "Q" | "Q(zeta_m)", "tensors": {...},
// "modules": [...]}. A scalar is a string "a/b" or a list of coefficient
// strings c_k of sum_k c_k zeta_m^k.
namespace detail {

inline int parse_field(const std::string& s) {
    if (s == "Q") return 1;
    if (s.rfind("Q(zeta_", 0) == 0 && s.back() == ')') {
        try {
            const int m = std::stoi(s.substr(7, s.size() - 8));
            if (m >= 1) return m;
        } catch (const std::exception&) {
        }
    }
    throw bundle_error("format", "field must be \"Q\" or \"Q(zeta_m)\", got \"" + s + "\"");
}

inline std::string field_name(int m) { return m == 1 ? "Q" : "Q(zeta_" + std::to_string(m) + ")"; }

inline json scalar_to_json(const Scalar& s, int field) {
    if (s.is_rational()) return s.coeffs()[0].str();
    const Scalar p = s.promote(std::lcm(field, s.field()));
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.str());
    return a;
}

inline Scalar scalar_from_json(const json& j, int field, const std::string& where) {
    try {
        if (j.is_string()) return Scalar::parse(j.get<std::string>());
        if (j.is_array()) {
            std::vector<Rat> c;
            for (const auto& x : j) c.push_back(Rat::parse(x.get<std::string>()));
            return Scalar::from_coeffs(field, c);
        }
    } catch (const std::exception& e) {
        throw bundle_error("format", where + ": bad scalar (" + e.what() + ")");
    }
    throw bundle_error("format", where + ": a scalar must be a string or a list of strings");
}

inline json mat_to_json(const Mat& m, int field) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        json r = json::array();
        for (std::size_t k = 0; k < m.cols; ++k) r.push_back(scalar_to_json(m(i, k), field));
        rows.push_back(std::move(r));
    }
    return rows;
}

inline Mat mat_from_json(const json& parent, const std::string& key, std::size_t rows, std::size_t cols, int field) {
    if (!parent.contains(key)) throw bundle_error("format", "missing tensor '" + key + "'");
    const json& j = parent.at(key);
    if (!j.is_array() || j.size() != rows)
        throw bundle_error("format", "tensor '" + key + "' must have " + std::to_string(rows) + " rows");
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw bundle_error("format", "tensor '" + key + "' row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k)
            m(i, k) = scalar_from_json(j[i][k], field, key + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
    }
    return m;
}

inline std::size_t positive_dim(const json& j, const std::string& what) {
    if (!j.contains("dim") || !j.at("dim").is_number_integer() || j.at("dim").get<long long>() < 1)
        throw bundle_error("format", what + ": 'dim' must be a positive integer");
    return j.at("dim").get<std::size_t>();
}

}  // namespace detail

inline json bundle_to_json(const CoendBundle& b) {
    using detail::mat_to_json;
    const int f = b.field;
    json t = {{"delta", mat_to_json(b.delta, f)},
              {"eps", mat_to_json(b.eps, f)},
              {"S", mat_to_json(b.S, f)},
              {"Sinv", mat_to_json(b.Sinv, f)},
              {"mu", mat_to_json(b.mu, f)},
              {"eta", mat_to_json(b.eta, f)},
              {"omega_plus", mat_to_json(b.omega_plus, f)},
              {"omega_minus", mat_to_json(b.omega_minus, f)},
              {"theta_plus", mat_to_json(b.theta_plus, f)},
              {"theta_minus", mat_to_json(b.theta_minus, f)},
              {"c", mat_to_json(b.c, f)},
              {"cinv", mat_to_json(b.cinv, f)}};
    json mods = json::array();
    for (const auto& m : b.modules)
        mods.push_back({{"name", m.rib.name},
                        {"dim", m.rib.dim},
                        {"c", mat_to_json(m.rib.c, f)},
                        {"cinv", mat_to_json(m.rib.cinv, f)},
                        {"theta", mat_to_json(m.rib.theta, f)},
                        {"theta_inv", mat_to_json(m.rib.theta_inv, f)},
                        {"ev", mat_to_json(m.rib.ev, f)},
                        {"coev", mat_to_json(m.rib.coev, f)},
                        {"iv", mat_to_json(m.iv, f)}});
    return {{"name", b.name}, {"dim", b.d}, {"field", detail::field_name(f)}, {"tensors", t}, {"modules", mods}};
}

// Shapes are enforced here; the axioms are left to bundle_validate.
inline CoendBundle bundle_from_json(const json& j) {
    using detail::mat_from_json;
    if (!j.is_object()) throw bundle_error("format", "bundle file must hold a JSON object");
    CoendBundle b;
    b.name = j.value("name", std::string("unnamed"));
    b.d = detail::positive_dim(j, "bundle");
    b.field = detail::parse_field(j.value("field", std::string("Q")));
    if (!j.contains("tensors") || !j.at("tensors").is_object()) throw bundle_error("format", "missing 'tensors' object");
    const json& t = j.at("tensors");
    const std::size_t d = b.d, d2 = d * d;
    const int f = b.field;
    b.delta = mat_from_json(t, "delta", d2, d, f);
    b.eps = mat_from_json(t, "eps", 1, d, f);
    b.S = mat_from_json(t, "S", d, d, f);
    b.Sinv = mat_from_json(t, "Sinv", d, d, f);
    b.mu = mat_from_json(t, "mu", d, d2, f);
    b.eta = mat_from_json(t, "eta", d, 1, f);
    b.omega_plus = mat_from_json(t, "omega_plus", 1, d2, f);
    b.omega_minus = mat_from_json(t, "omega_minus", 1, d2, f);
    b.theta_plus = mat_from_json(t, "theta_plus", 1, d, f);
    b.theta_minus = mat_from_json(t, "theta_minus", 1, d, f);
    b.c = mat_from_json(t, "c", d2, d2, f);
    b.cinv = mat_from_json(t, "cinv", d2, d2, f);
    for (const auto& mj : j.value("modules", json::array())) {
        TestModule m;
        m.rib.name = mj.value("name", std::string("module"));
        const std::size_t v = detail::positive_dim(mj, "module '" + m.rib.name + "'"), v2 = v * v;
        m.rib.dim = v;
        m.rib.c = mat_from_json(mj, "c", v2, v2, f);
        m.rib.cinv = mat_from_json(mj, "cinv", v2, v2, f);
        m.rib.theta = mat_from_json(mj, "theta", v, v, f);
        m.rib.theta_inv = mat_from_json(mj, "theta_inv", v, v, f);
        m.rib.ev = mat_from_json(mj, "ev", 1, v2, f);
        m.rib.coev = mat_from_json(mj, "coev", v2, 1, f);
        m.iv = mat_from_json(mj, "iv", d, v2, f);
        b.modules.push_back(std::move(m));
    }
    return b;
}

inline CoendBundle load_bundle_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw bundle_error("format", "cannot open bundle file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw bundle_error("format", path + ": " + e.what());
    }
    return bundle_from_json(j);
}

// Pretty form with one matrix row per line.
inline std::string bundle_to_text(const CoendBundle& b) {
    std::function<void(std::ostream&, const json&, int)> emit = [&](std::ostream& os, const json& j, int ind) {
        const std::string pad(ind, ' ');
        if (j.is_object()) {
            os << "{\n";
            std::size_t k = 0;
            for (auto it = j.begin(); it != j.end(); ++it, ++k) {
                os << pad << "  " << json(it.key()).dump() << ": ";
                emit(os, it.value(), ind + 2);
                os << (k + 1 < j.size() ? ",\n" : "\n");
            }
            os << pad << "}";
        } else if (j.is_array() && !j.empty() && j[0].is_array() && (j[0].empty() || !j[0][0].is_array())) {
            os << "[\n";
            for (std::size_t k = 0; k < j.size(); ++k) os << pad << "  " << j[k].dump() << (k + 1 < j.size() ? ",\n" : "\n");
            os << pad << "]";
        } else if (j.is_array() && !j.empty() && j[0].is_object()) {
            os << "[\n";
            for (std::size_t k = 0; k < j.size(); ++k) {
                os << pad << "  ";
                emit(os, j[k], ind + 2);
                os << (k + 1 < j.size() ? ",\n" : "\n");
            }
            os << pad << "]";
        } else {
            os << j.dump();
        }
    };
    std::ostringstream os;
    emit(os, bundle_to_json(b), 0);
    os << "\n";
    return os.str();
}

inline void save_bundle_file(const CoendBundle& b, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw bundle_error("format", "cannot write '" + path + "'");
    out << bundle_to_text(b);
}

// A built-in name, a file path, or a name found on HOPFC_BUNDLE_PATH (as
// NAME or NAME.json). File bundles are validated when validate is set.
inline CoendBundle resolve_bundle(const std::string& spec, bool validate = true) {
    for (const auto& n : builtin_bundle_names())
        if (n == spec) return builtin_bundle(spec);
    namespace fs = std::filesystem;
    std::string path;
    if (fs::is_regular_file(spec)) {
        path = spec;
    } else if (const char* env = std::getenv("HOPFC_BUNDLE_PATH")) {
        std::stringstream ss(env);
        std::string dir;
        while (path.empty() && std::getline(ss, dir, ':')) {
            if (dir.empty()) continue;
            for (const auto& cand : {fs::path(dir) / spec, fs::path(dir) / (spec + ".json")})
                if (fs::is_regular_file(cand)) {
                    path = cand.string();
                    break;
                }
        }
    }
    if (path.empty()) throw bundle_error("format", "no built-in bundle or bundle file named '" + spec + "'");
    CoendBundle b = load_bundle_file(path);
    if (validate) {
        const ValidationReport r = bundle_validate(b);
        if (!r.ok()) throw bundle_error(r.failures.front(), "bundle '" + b.name + "' fails axiom " + r.failures.front());
    }
    return b;
}

}  // namespace hopfdiag
