#pragma once

#include <fstream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "actm/ansatz.hpp"
#include "actm/classify.hpp"
#include "actm/equiv.hpp"
#include "actm/geometry.hpp"
#include "actm/model.hpp"

namespace actm {

using json = nlohmann::ordered_json;

/// Scalars serialize as "p/q" strings ("p" when integral); numeric JSON values
/// are accepted on input, doubles converting exactly as dyadic rationals.
inline json to_json(const Rational& r) { return r.to_string(); }

inline Rational rational_from_json(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_number_float()) return Rational::from_double(j.get<double>());
    throw ParseError("scalar: expected \"p/q\" string or number, got " + j.dump());
}

inline json to_json(const Matrix<Rational>& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Matrix<Rational> matrix_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("matrix: expected array of rows");
    const int rows = static_cast<int>(j.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(j.at(0).size());
    Matrix<Rational> m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j.at(i).size()) != cols) throw ParseError("matrix: ragged rows");
        for (int c = 0; c < cols; ++c) m(i, c) = rational_from_json(j.at(i).at(c));
    }
    return m;
}

inline json components_to_json(const CurvTensor<Rational>& t) {
    json arr = json::array();
    for (const auto& [key, value] : t.components()) {
        json item;
        item["i"] = key[0] + 1;  // 1-based on the wire
        item["j"] = key[1] + 1;
        item["k"] = key[2] + 1;
        item["l"] = key[3] + 1;
        item["value"] = to_json(value);
        arr.push_back(std::move(item));
    }
    return arr;
}

inline CurvTensor<Rational> components_from_json(const json& arr, int dim) {
    if (!arr.is_array()) throw ParseError("components: expected array");
    CurvTensor<Rational> t(dim);
    for (const auto& item : arr) {
        try {
            t.add(item.at("i").get<int>() - 1, item.at("j").get<int>() - 1, item.at("k").get<int>() - 1,
                  item.at("l").get<int>() - 1, rational_from_json(item.at("value")));
        } catch (const DimensionMismatch& e) {
            throw ParseError(std::string("components: ") + e.what());
        } catch (const json::exception& e) {
            throw ParseError(std::string("components: ") + e.what());
        }
    }
    return t;
}

inline json model_to_json(const Model<Rational>& m) {
    json j;
    j["dim"] = m.dim();
    j["gram"] = to_json(m.inner().gram());
    j["components"] = components_to_json(m.tensor());
    return j;
}

/// Parses the parts without running the model validation; callers decide when
/// to validate so that check-style commands can report a broken tensor.
inline std::pair<BilinearForm<Rational>, CurvTensor<Rational>> model_parts_from_json(const json& j) {
    try {
        const int dim = j.at("dim").get<int>();
        Matrix<Rational> gram = matrix_from_json(j.at("gram"));
        if (gram.rows() != dim) throw ParseError("model: gram size does not match dim");
        CurvTensor<Rational> t = components_from_json(j.at("components"), dim);
        return {BilinearForm<Rational>(std::move(gram)), std::move(t)};
    } catch (const json::exception& e) {
        throw ParseError(std::string("model: ") + e.what());
    } catch (const FormNotSymmetric& e) {
        throw ParseError(std::string("model: ") + e.what());
    }
}

inline Model<Rational> model_from_json(const json& j) {
    auto [form, tensor] = model_parts_from_json(j);
    return Model<Rational>::make(std::move(form), std::move(tensor));
}

inline json seed_to_json(const Seed<Rational>& s) {
    json j;
    j["p"] = s.p();
    j["gram"] = to_json(s.g.gram());
    j["A1"] = components_to_json(s.A1);
    j["A2"] = components_to_json(s.A2);
    return j;
}

inline Seed<Rational> seed_from_json(const json& j) {
    try {
        const int p = j.at("p").get<int>();
        Matrix<Rational> gram = matrix_from_json(j.at("gram"));
        if (gram.rows() != p) throw ParseError("seed: gram size does not match p");
        CurvTensor<Rational> a1 = components_from_json(j.at("A1"), p);
        CurvTensor<Rational> a2 = components_from_json(j.at("A2"), p);
        return make_seed(BilinearForm<Rational>(std::move(gram)), std::move(a1), std::move(a2));
    } catch (const json::exception& e) {
        throw ParseError(std::string("seed: ") + e.what());
    } catch (const FormNotSymmetric& e) {
        throw ParseError(std::string("seed: ") + e.what());
    }
}

inline json witness_to_json(const Witness<Rational>& w) {
    json j;
    j["theta"] = to_json(w.theta);
    j["T"] = to_json(w.T);
    return j;
}

inline Witness<Rational> witness_from_json(const json& j) {
    try {
        return Witness<Rational>{matrix_from_json(j.at("theta")), matrix_from_json(j.at("T"))};
    } catch (const json::exception& e) {
        throw ParseError(std::string("witness: ") + e.what());
    }
}

inline Matrix<Rational> matrix_file_from_json(const json& j) {
    // a bare matrix or an object with a single "T" / "theta" field
    if (j.is_array()) return matrix_from_json(j);
    if (j.is_object() && j.contains("T")) return matrix_from_json(j.at("T"));
    throw ParseError("matrix file: expected [[..]] or {\"T\": [[..]]}");
}

inline json metric_to_json(const PolyMetric& g) {
    json j;
    j["dim"] = g.dim();
    j["nvars"] = g.nvars();
    json entries = json::array();
    for (int i = 0; i < g.dim(); ++i)
        for (int k = i; k < g.dim(); ++k) {
            if (g.at(i, k).is_zero()) continue;
            json entry;
            entry["i"] = i + 1;
            entry["j"] = k + 1;
            json terms = json::array();
            for (const auto& [e, c] : g.at(i, k).terms()) {
                json term;
                term["exponents"] = e;
                term["coeff"] = to_json(c);
                terms.push_back(std::move(term));
            }
            entry["terms"] = std::move(terms);
            entries.push_back(std::move(entry));
        }
    j["entries"] = std::move(entries);
    return j;
}

inline PolyMetric metric_from_json(const json& j) {
    try {
        const int dim = j.at("dim").get<int>();
        const int nvars = j.at("nvars").get<int>();
        PolyMetric g(dim, nvars);
        for (const auto& entry : j.at("entries")) {
            const int i = entry.at("i").get<int>() - 1;
            const int k = entry.at("j").get<int>() - 1;
            if (i < 0 || k < 0 || i >= dim || k >= dim) throw ParseError("metric: entry index out of range");
            MultiPoly p(nvars);
            for (const auto& term : entry.at("terms")) {
                std::vector<unsigned> e = term.at("exponents").get<std::vector<unsigned>>();
                if (static_cast<int>(e.size()) != nvars) throw ParseError("metric: exponent tuple length");
                p.add_term(e, rational_from_json(term.at("coeff")));
            }
            g.set(i, k, p);
        }
        return g;
    } catch (const json::exception& e) {
        throw ParseError(std::string("metric: ") + e.what());
    }
}

inline json classification_to_json(const Classification& c) {
    json j;
    switch (c.kind) {
        case ModelKind::Einstein: j["variant"] = "Einstein"; break;
        case ModelKind::SimpleComplex: j["variant"] = "SimpleComplex"; break;
        case ModelKind::NotSimple: j["variant"] = "NotSimple"; break;
        case ModelKind::NotCommuting: j["variant"] = "NotCommuting"; break;
    }
    j["a1"] = to_json(c.a1);
    j["a2_squared"] = to_json(c.a2_squared);
    if (c.kind == ModelKind::NotSimple) j["reason"] = to_string(c.reason);
    return j;
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError("'" + path + "': " + e.what());
    }
}

inline void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

} // namespace actm
