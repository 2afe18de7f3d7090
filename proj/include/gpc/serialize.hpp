#ifndef GPC_SERIALIZE_HPP
#define GPC_SERIALIZE_HPP

#include <bit>
#include <cstddef>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "gpc/cosetcode.hpp"
#include "gpc/stabilizer.hpp"
#include "gpc/unioncode.hpp"

namespace gpc {

/*
 * Text form of a bit matrix: a width header followed by one
 * least-significant-nibble-first hex row per line.
 */
inline void write_matrix_text(std::ostream& os, const BitMatrix& mat) {
    os << "n=" << mat.cols() << "\n";
    for (std::size_t i = 0; i < mat.rows(); ++i) os << mat.row(i).to_hex() << "\n";
}

inline BitMatrix parse_matrix_text(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("n=", 0) != 0)
        throw std::runtime_error("matrix text: missing width header");
    std::size_t cols = std::stoul(line.substr(2));
    if (cols == 0) throw std::runtime_error("matrix text: zero width");
    BitMatrix out(0, cols);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        out.append_row(BitVector::from_hex(cols, line));
    }
    return out;
}

inline nlohmann::json symp_to_json(const SympVector& v) {
    return nlohmann::json{{"x", v.x.to_hex()}, {"z", v.z.to_hex()}};
}

inline SympVector symp_from_json(const nlohmann::json& j, std::size_t n) {
    if (!j.is_object() || !j.contains("x") || !j.contains("z"))
        throw std::runtime_error("manifest: malformed symplectic vector");
    return SympVector(BitVector::from_hex(n, j.at("x").get<std::string>()),
                      BitVector::from_hex(n, j.at("z").get<std::string>()));
}

inline nlohmann::json hex_rows(const BitMatrix& mat) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < mat.rows(); ++i) rows.push_back(mat.row(i).to_hex());
    return rows;
}

inline BitMatrix matrix_from_hex(const nlohmann::json& rows, std::size_t cols) {
    if (!rows.is_array()) throw std::runtime_error("manifest: expected an array of hex rows");
    BitMatrix out(0, cols);
    for (const auto& r : rows) out.append_row(BitVector::from_hex(cols, r.get<std::string>()));
    return out;
}

inline void require_schema(const nlohmann::json& j, const std::string& family) {
    if (!j.is_object()) throw std::runtime_error("manifest: not an object");
    if (!j.contains("schema") || j.at("schema").get<int>() != 1)
        throw std::runtime_error("manifest: unsupported schema");
    if (!j.contains("family") || j.at("family").get<std::string>() != family)
        throw std::runtime_error("manifest: family mismatch, expected " + family);
}

/* classical union code (Goethals or Preparata family) */
inline nlohmann::json coset_union_to_json(const CosetUnionCode& u, int m) {
    nlohmann::json reps = nlohmann::json::array();
    for (const BitVector& r : u.reps) reps.push_back(r.to_hex());
    return nlohmann::json{{"schema", 1},         {"family", u.label},
                          {"m", m},              {"n", u.base.n},
                          {"k_base", u.base.k},  {"generator", hex_rows(u.base.gen)},
                          {"reps", reps}};
}

inline CosetUnionCode coset_union_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("family")) throw std::runtime_error("manifest: not an object");
    std::string family = j.at("family").get<std::string>();
    require_schema(j, family);
    std::size_t n = j.at("n").get<std::size_t>();
    BitMatrix gen = matrix_from_hex(j.at("generator"), n);
    LinearCode base = make_linear_code(gen, family + "-base");
    if (base.k != j.at("k_base").get<std::size_t>())
        throw std::runtime_error("manifest: generator rank mismatch");
    std::vector<BitVector> reps;
    for (const auto& r : j.at("reps")) reps.push_back(BitVector::from_hex(n, r.get<std::string>()));
    return make_coset_union(base, reps, family);
}

inline nlohmann::json stabilizer_core_json(const StabilizerCode& s) {
    nlohmann::json stab = nlohmann::json::array(), lx = nlohmann::json::array(),
                   lz = nlohmann::json::array();
    for (std::size_t i = 0; i < s.stab.rank(); ++i) stab.push_back(symp_to_json(s.stab.generator(i)));
    for (const SympVector& v : s.logical_x) lx.push_back(symp_to_json(v));
    for (const SympVector& v : s.logical_z) lz.push_back(symp_to_json(v));
    return nlohmann::json{{"n", s.n},        {"k", s.k},        {"stab", stab},
                          {"logical_x", lx}, {"logical_z", lz}, {"claimed_d", s.claimed_d}};
}

inline StabilizerCode stabilizer_core_from_json(const nlohmann::json& j, const std::string& name) {
    std::size_t n = j.at("n").get<std::size_t>();
    BitMatrix rows(0, 2 * n);
    for (const auto& g : j.at("stab")) rows.append_row(symp_from_json(g, n).packed());
    StabilizerCode s = stabilizer_from_generators(n, rows, name, j.at("claimed_d").get<int>());
    if (s.k != j.at("k").get<std::size_t>()) throw std::runtime_error("manifest: k mismatch");
    std::vector<SympVector> lx, lz;
    for (const auto& v : j.at("logical_x")) lx.push_back(symp_from_json(v, n));
    for (const auto& v : j.at("logical_z")) lz.push_back(symp_from_json(v, n));
    if (lx.size() != s.k || lz.size() != s.k) throw std::runtime_error("manifest: logical count mismatch");
    s.logical_x = std::move(lx);
    s.logical_z = std::move(lz);
    if (!audit_ok(s)) throw std::runtime_error("manifest: stabilizer audit failed");
    return s;
}

inline nlohmann::json stabilizer_to_json(const StabilizerCode& s, const std::string& family, int m) {
    nlohmann::json j = stabilizer_core_json(s);
    j["schema"] = 1;
    j["family"] = family;
    j["m"] = m;
    return j;
}

inline StabilizerCode stabilizer_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("family")) throw std::runtime_error("manifest: not an object");
    std::string family = j.at("family").get<std::string>();
    require_schema(j, family);
    return stabilizer_core_from_json(j, family);
}

/*
 * Full quantum Goethals-Preparata manifest: base stabilizer, logicals and
 * the classical ingredients. Translations are regenerated from the
 * representatives on load.
 */
inline nlohmann::json gp_quantum_to_json(const GpQuantumCode& q) {
    int m = std::countr_zero(q.code.base.n);
    nlohmann::json j = stabilizer_core_json(q.code.base);
    j["schema"] = 1;
    j["family"] = "gp-quantum";
    j["m"] = m;
    j["K"] = q.code.K();
    j["log2_dim"] = int(q.code.log2_dim() + 0.5);
    nlohmann::json reps = nlohmann::json::array();
    for (const BitVector& r : q.classical.reps) reps.push_back(r.to_hex());
    j["classical"] = nlohmann::json{{"generator_g", hex_rows(q.classical.cg.gen)},
                                    {"generator_p", hex_rows(q.classical.cp.gen)},
                                    {"reps", reps}};
    return j;
}

inline UnionStabilizerCode gp_union_from_json(const nlohmann::json& j) {
    require_schema(j, "gp-quantum");
    StabilizerCode base = stabilizer_core_from_json(j, "gp-base");
    std::size_t n = base.n;
    std::vector<BitVector> reps;
    for (const auto& r : j.at("classical").at("reps"))
        reps.push_back(BitVector::from_hex(n, r.get<std::string>()));
    UnionStabilizerCode u = make_union_code(std::move(base), gp_translations(reps), "gp-quantum");
    if (u.K() != j.at("K").get<std::size_t>()) throw std::runtime_error("manifest: K mismatch");
    if (int(u.log2_dim() + 0.5) != j.at("log2_dim").get<int>())
        throw std::runtime_error("manifest: dimension mismatch");
    return u;
}

}  // namespace gpc

#endif
