#include "dets2/io.hpp"

#include <fstream>
#include <sstream>

namespace dets2 {

namespace {

void require_object(const json& j, const char* what) {
    if (!j.is_object()) throw InputError(std::string(what) + " must be a JSON object");
}

const json& require_key(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw InputError("missing key \"" + std::string(key) + "\"");
    return *it;
}

int parse_dimension(const json& j) {
    const json& jd = require_key(j, "d");
    if (!jd.is_number_integer() || jd.get<long long>() < 2)
        throw InputError("key \"d\" must be an integer >= 2");
    long long d = jd.get<long long>();
    if (d > 64) throw InputError("key \"d\" is implausibly large");
    return static_cast<int>(d);
}

std::string scalar_at(const json& v, const std::string& where) {
    if (!v.is_string())
        throw InputError("in " + where + ": scalars must be strings");
    return v.get<std::string>();
}

template <class F>
EdgeTensor<typename F::Scalar> parse_vectors(const json& j, int d, const F& field) {
    const json& vecs = require_key(j, "vectors");
    if (!vecs.is_object()) throw InputError("key \"vectors\" must be an object");
    for (auto it = vecs.begin(); it != vecs.end(); ++it)
        parse_edge_key(it.key(), d); // rejects unknown keys
    EdgeTensor<typename F::Scalar> t(d, field);
    for (Edge e : edges(d)) {
        const std::string key = edge_key(e);
        auto it = vecs.find(key);
        if (it == vecs.end()) throw InputError("missing vector for edge \"" + key + "\"");
        if (!it->is_array() || static_cast<int>(it->size()) != d)
            throw InputError("vector \"" + key + "\" must be an array of " + std::to_string(d) +
                             " scalar strings");
        VectorX<typename F::Scalar> v(d);
        for (int r = 0; r < d; ++r) {
            try {
                v(r) = field.parse(scalar_at((*it)[static_cast<std::size_t>(r)], "vector \"" + key + "\""));
            } catch (const InputError& err) {
                throw InputError("in vector \"" + key + "\": " + err.what());
            }
        }
        t.set_vec(e, v);
    }
    return t;
}

template <class F>
PointConfig<typename F::Scalar> parse_point_rows(const json& j, int d, const F& field) {
    const json& pts = require_key(j, "points");
    const int n = vertex_count(d);
    if (!pts.is_array() || static_cast<int>(pts.size()) != n)
        throw InputError("key \"points\" must be an array of " + std::to_string(n) + " points");
    PointConfig<typename F::Scalar> c(d, field);
    for (int i = 0; i < n; ++i) {
        const json& p = pts[static_cast<std::size_t>(i)];
        if (!p.is_array() || static_cast<int>(p.size()) != d)
            throw InputError("point " + std::to_string(i + 1) + " must be an array of " +
                             std::to_string(d) + " scalar strings");
        for (int r = 0; r < d; ++r) {
            try {
                c.points(r, i) = field.parse(scalar_at(p[static_cast<std::size_t>(r)],
                                                       "point " + std::to_string(i + 1)));
            } catch (const InputError& err) {
                throw InputError("in point " + std::to_string(i + 1) + ": " + err.what());
            }
        }
    }
    return c;
}

template <class S>
json instance_json_impl(const EdgeTensor<S>& t) {
    json vecs = json::object();
    for (Edge e : edges(t.d())) {
        json arr = json::array();
        for (int r = 0; r < t.d(); ++r) arr.push_back(t.vec(e)(r).str());
        vecs[edge_key(e)] = arr;
    }
    return json{{"d", t.d()}, {"field", field_spec_json(t.field().spec())}, {"vectors", vecs}};
}

template <class S>
json points_json_impl(const PointConfig<S>& c) {
    json pts = json::array();
    for (int i = 1; i <= vertex_count(c.d); ++i) {
        json p = json::array();
        for (int r = 0; r < c.d; ++r) p.push_back(c.points(r, i - 1).str());
        pts.push_back(p);
    }
    return json{{"d", c.d}, {"field", field_spec_json(c.field.spec())}, {"points", pts}};
}

template <class S>
json matrix_json_impl(const SystemMatrix<S>& sm) {
    json entries = json::array();
    for (Eigen::Index r = 0; r < sm.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < sm.cols(); ++c) row.push_back(sm.m(r, c).str());
        entries.push_back(row);
    }
    json col_edges = json::array();
    for (Eigen::Index c = 0; c < sm.cols(); ++c) col_edges.push_back(edge_key(sm.edge_of_col(c)));
    return json{{"rows", sm.rows()},
                {"cols", sm.cols()},
                {"entries", entries},
                {"row_blocks", sm.block_equations},
                {"rows_per_block", sm.d},
                {"col_edges", col_edges}};
}

template <class S>
json witness_json_impl(const KernelWitness<S>& w) {
    json out = json::object();
    for (Edge e : edges(w.d)) out[edge_key(e)] = w.coeff(e).str();
    return out;
}

} // namespace

json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open \"" + path.string() + "\"");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON in \"" + path.string() + "\": " + e.what());
    }
    return j;
}

void write_json_file(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write \"" + path.string() + "\"");
    out << j.dump(2) << "\n";
}

std::string edge_key(Edge e) { return std::to_string(e.i) + "," + std::to_string(e.j); }

Edge parse_edge_key(const std::string& key, int d) {
    const auto comma = key.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 == key.size())
        throw InputError("bad edge key \"" + key + "\" (expected \"i,j\")");
    int i = 0, j = 0;
    try {
        std::size_t used = 0;
        i = std::stoi(key.substr(0, comma), &used);
        if (used != comma) throw std::invalid_argument("");
        const std::string rest = key.substr(comma + 1);
        j = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw InputError("bad edge key \"" + key + "\" (expected \"i,j\")");
    }
    Edge e{i, j};
    try {
        check_edge(e, d);
    } catch (const std::out_of_range& err) {
        throw InputError(std::string("bad edge key \"") + key + "\": " + err.what());
    }
    return e;
}

FieldSpec parse_field_spec(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "rational") return FieldSpec::rational();
        throw InputError("field \"" + j.get<std::string>() + "\" not recognized (use \"rational\" or {\"prime\": p})");
    }
    if (j.is_object()) {
        const json& p = require_key(j, "prime");
        if (!p.is_number_unsigned() && !p.is_number_integer())
            throw InputError("key \"prime\" must be a positive integer");
        long long v = p.get<long long>();
        if (v < 2) throw InputError("key \"prime\" must be a positive integer >= 2");
        return FieldSpec::prime(static_cast<std::uint64_t>(v));
    }
    throw InputError("key \"field\" must be \"rational\" or {\"prime\": p}");
}

json field_spec_json(const FieldSpec& spec) {
    if (spec.kind() == FieldSpec::Kind::rational) return json("rational");
    return json{{"prime", spec.p()}};
}

Instance parse_instance(const json& j) {
    require_object(j, "instance");
    const int d = parse_dimension(j);
    const FieldSpec spec = parse_field_spec(require_key(j, "field"));
    if (spec.kind() == FieldSpec::Kind::rational) return parse_vectors(j, d, RationalField{});
    return parse_vectors(j, d, PrimeField(spec));
}

json instance_json(const EdgeTensor<Rational>& t) { return instance_json_impl(t); }
json instance_json(const EdgeTensor<Fp>& t) { return instance_json_impl(t); }

Partition parse_partition(const json& j) {
    require_object(j, "partition");
    const int d = parse_dimension(j);
    const json& colors = require_key(j, "colors");
    if (!colors.is_object()) throw InputError("key \"colors\" must be an object");
    for (auto it = colors.begin(); it != colors.end(); ++it) parse_edge_key(it.key(), d);
    std::vector<int> flat(static_cast<std::size_t>(edge_count(d)), 0);
    for (Edge e : edges(d)) {
        const std::string key = edge_key(e);
        auto it = colors.find(key);
        if (it == colors.end()) throw InputError("missing color for edge \"" + key + "\"");
        if (!it->is_number_integer())
            throw InputError("color for edge \"" + key + "\" must be an integer");
        const long long c = it->get<long long>();
        if (c < 1 || c > d)
            throw InputError("color " + std::to_string(c) + " for edge \"" + key +
                             "\" out of range 1.." + std::to_string(d));
        flat[static_cast<std::size_t>(column_index(e, d)) - 1] = static_cast<int>(c);
    }
    return Partition(d, std::move(flat));
}

json partition_json(const Partition& p) {
    json colors = json::object();
    for (Edge e : edges(p.d())) colors[edge_key(e)] = p.color(e);
    return json{{"d", p.d()}, {"colors", colors}};
}

PointsInstance parse_points(const json& j) {
    require_object(j, "points instance");
    const int d = parse_dimension(j);
    const FieldSpec spec = parse_field_spec(require_key(j, "field"));
    if (spec.kind() == FieldSpec::Kind::rational) return parse_point_rows(j, d, RationalField{});
    return parse_point_rows(j, d, PrimeField(spec));
}

json points_json(const PointConfig<Rational>& c) { return points_json_impl(c); }
json points_json(const PointConfig<Fp>& c) { return points_json_impl(c); }

json matrix_json(const SystemMatrix<Rational>& sm) { return matrix_json_impl(sm); }
json matrix_json(const SystemMatrix<Fp>& sm) { return matrix_json_impl(sm); }

json witness_json(const KernelWitness<Rational>& w) { return witness_json_impl(w); }
json witness_json(const KernelWitness<Fp>& w) { return witness_json_impl(w); }

json golden_json(const GoldenValues& g) {
    json dets = json::object();
    for (const auto& [d, value] : g.canonical_det) dets[std::to_string(d)] = value;
    return json{{"canonical_det_s2", dets},
                {"d2_cycle_free_count", g.d2_cycle_free},
                {"generated_by", "dets2 oracle regen"}};
}

GoldenValues parse_golden(const json& j) {
    require_object(j, "golden file");
    GoldenValues g;
    const json& dets = require_key(j, "canonical_det_s2");
    if (!dets.is_object()) throw InputError("key \"canonical_det_s2\" must be an object");
    for (auto it = dets.begin(); it != dets.end(); ++it) {
        int d = 0;
        try {
            d = std::stoi(it.key());
        } catch (const std::exception&) {
            throw InputError("bad dimension key \"" + it.key() + "\" in golden file");
        }
        if (!it->is_string()) throw InputError("golden determinants must be scalar strings");
        g.canonical_det[d] = it->get<std::string>();
    }
    const json& cf = require_key(j, "d2_cycle_free_count");
    if (!cf.is_number_integer()) throw InputError("key \"d2_cycle_free_count\" must be an integer");
    g.d2_cycle_free = cf.get<long long>();
    return g;
}

} // namespace dets2
