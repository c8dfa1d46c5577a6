#include "atgrs/io.hpp"

#include <sstream>

namespace atgrs {

namespace {

std::uint64_t get_uint(const json& j, const std::string& name) {
    if (!j.contains(name)) fail(errc::invalid_argument, "missing field \"" + name + "\"");
    const json& v = j.at(name);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        fail(errc::invalid_argument, "\"" + name + "\" must be a non-negative integer");
    return v.get<std::uint64_t>();
}

}  // namespace

Field parse_field(const json& j) {
    if (!j.is_object()) fail(errc::invalid_argument, "\"field\" must be an object");
    std::uint64_t p = get_uint(j, "p");
    unsigned m = j.contains("m") ? static_cast<unsigned>(get_uint(j, "m")) : 1;
    std::optional<std::vector<std::uint32_t>> modulus;
    if (j.contains("modulus") && !j.at("modulus").is_null()) {
        const json& mod = j.at("modulus");
        if (!mod.is_array()) fail(errc::invalid_argument, "\"modulus\" must be an array");
        std::vector<std::uint32_t> digits;
        for (const auto& d : mod) digits.push_back(d.get<std::uint32_t>());
        modulus = std::move(digits);
    }
    return make_field(p, m, modulus);
}

json field_to_json(const FieldCtx& f) {
    json j{{"p", f.p()}, {"m", f.m()}};
    if (f.m() > 1) j["modulus"] = f.modulus();
    return j;
}

std::vector<Elt> parse_elt_list(const FieldCtx& f, const json& j, const std::string& name) {
    if (!j.is_array()) fail(errc::invalid_argument, "\"" + name + "\" must be an array");
    std::vector<Elt> out;
    out.reserve(j.size());
    for (const auto& x : j) {
        if (!x.is_number_integer() && !x.is_number_unsigned())
            fail(errc::invalid_argument, "\"" + name + "\" entries must be integers");
        long long v = x.get<long long>();
        if (v < 0 || static_cast<std::uint64_t>(v) >= f.q())
            fail(errc::invalid_argument,
                 "\"" + name + "\" entry " + std::to_string(v) + " outside [0, " + std::to_string(f.q()) + ")");
        out.push_back(f.elt(static_cast<std::uint64_t>(v)));
    }
    return out;
}

CodeSpec parse_code_spec(const json& j) {
    if (!j.is_object()) fail(errc::invalid_argument, "code spec must be a JSON object");
    if (!j.contains("field")) fail(errc::invalid_argument, "missing field \"field\"");
    Field f = parse_field(j.at("field"));
    int n = static_cast<int>(get_uint(j, "n"));
    int k = static_cast<int>(get_uint(j, "k"));
    if (!j.contains("alpha")) fail(errc::invalid_argument, "missing field \"alpha\"");
    std::vector<Elt> alpha = parse_elt_list(*f, j.at("alpha"), "alpha");
    std::vector<Elt> v;
    if (j.contains("v") && !j.at("v").is_null()) v = parse_elt_list(*f, j.at("v"), "v");

    if (n <= k || k < 3)
        fail(errc::invalid_argument, "need 3 <= k < n (got n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
    TwistMatrix twist(*f, k, n - k);
    if (j.contains("eta") && !j.at("eta").is_null()) {
        const json& eta = j.at("eta");
        if (!eta.is_array() || eta.size() != static_cast<std::size_t>(k))
            fail(errc::invalid_argument, "\"eta\" must have k rows");
        for (int m = 0; m < k; ++m) {
            std::vector<Elt> row = parse_elt_list(*f, eta.at(static_cast<std::size_t>(m)), "eta");
            if (row.size() != static_cast<std::size_t>(n - k))
                fail(errc::invalid_argument, "\"eta\" row " + std::to_string(m) + " must have n-k entries");
            for (int i = 0; i < n - k; ++i) twist.set(m, i + 1, row[static_cast<std::size_t>(i)]);
        }
    }
    return CodeSpec::make(std::move(f), n, k, std::move(alpha), std::move(v), std::move(twist));
}

json code_spec_to_json(const CodeSpec& spec) {
    json j;
    j["field"] = field_to_json(spec.ctx());
    j["n"] = spec.n;
    j["k"] = spec.k;
    json alpha = json::array(), v = json::array(), eta = json::array();
    for (const Elt& a : spec.alpha) alpha.push_back(a.value());
    for (const Elt& x : spec.v) v.push_back(x.value());
    for (int m = 0; m < spec.k; ++m) {
        json row = json::array();
        for (int i = 1; i <= spec.n - spec.k; ++i) row.push_back(spec.twist.entry(m, i).value());
        eta.push_back(std::move(row));
    }
    j["alpha"] = std::move(alpha);
    j["v"] = std::move(v);
    j["eta"] = std::move(eta);
    return j;
}

json report_to_json(const MdsReport& r) {
    json j;
    j["mds"] = r.mds;
    j["method"] = mds_method_name(r.method);
    j["failing_subsets"] = r.failing_subsets;
    j["novelty"] = novelty_name(r.novelty);
    return j;
}

std::string report_to_text(const MdsReport& r) {
    std::ostringstream os;
    os << "mds: " << (r.mds ? "true" : "false") << "\n";
    os << "method: " << mds_method_name(r.method) << "\n";
    os << "novelty: " << novelty_name(r.novelty) << "\n";
    if (r.failing_subsets.empty()) {
        os << "failing subsets: none\n";
    } else {
        os << "failing subsets:\n";
        for (const auto& s : r.failing_subsets) {
            os << " ";
            for (int i : s) os << " " << i;
            os << "\n";
        }
    }
    return os.str();
}

std::string mat_to_text(const Mat& m) {
    std::ostringstream os;
    os << m.rows() << " " << m.cols() << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << " ";
            os << m.at(i, j).value();
        }
        os << "\n";
    }
    return os.str();
}

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).value());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string poly_to_text(const Poly& p) {
    std::ostringstream os;
    for (int i = 0; i <= p.degree(); ++i) {
        if (i) os << " ";
        os << p.coeff(i).value();
    }
    return os.str();
}

Poly poly_from_text(const FieldCtx& f, const std::string& text) {
    std::istringstream is(text);
    std::vector<Elt> coeffs;
    long long v;
    while (is >> v) {
        if (v < 0 || static_cast<std::uint64_t>(v) >= f.q())
            fail(errc::invalid_argument, "coefficient " + std::to_string(v) + " outside [0, q)");
        coeffs.push_back(f.elt(static_cast<std::uint64_t>(v)));
    }
    if (!is.eof()) fail(errc::invalid_argument, "polynomial text must be space-separated integers");
    return Poly(f, std::move(coeffs));
}

Mat mat_from_json(const FieldCtx& f, const json& j) {
    if (!j.is_array() || j.empty()) fail(errc::invalid_argument, "matrix must be a non-empty array of rows");
    std::size_t cols = j.at(0).size();
    Mat m(f, j.size(), cols);
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::vector<Elt> row = parse_elt_list(f, j.at(i), "matrix row");
        if (row.size() != cols) fail(errc::invalid_argument, "matrix rows must have equal length");
        for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = row[c];
    }
    return m;
}

}  // namespace atgrs
