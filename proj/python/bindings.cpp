#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "atgrs/io.hpp"
#include "atgrs/search.hpp"
#include "atgrs/toeplitz.hpp"
#include "atgrs/vandermonde.hpp"
#include "atgrs/wseq.hpp"

namespace py = pybind11;
using namespace atgrs;

namespace {

// The python surface works in canonical element integers throughout.
std::vector<Elt> to_elts(const Field& f, const std::vector<std::uint64_t>& vs) {
    std::vector<Elt> out;
    out.reserve(vs.size());
    for (auto v : vs) out.push_back(f->elt(v));
    return out;
}

std::vector<std::uint64_t> from_elts(const std::vector<Elt>& es) {
    std::vector<std::uint64_t> out;
    out.reserve(es.size());
    for (const Elt& e : es) out.push_back(e.value());
    return out;
}

std::vector<std::vector<std::uint64_t>> from_mat(const Mat& m) {
    std::vector<std::vector<std::uint64_t>> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        rows[i].resize(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j).value();
    }
    return rows;
}

Mat to_mat(const Field& f, const std::vector<std::vector<std::uint64_t>>& rows) {
    if (rows.empty()) fail(errc::invalid_argument, "matrix must be non-empty");
    Mat m(*f, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size())
            fail(errc::invalid_argument, "matrix rows must have equal length");
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = f->elt(rows[i][j]);
    }
    return m;
}

CodeSpec make_spec(const Field& f, int n, int k, const std::vector<std::uint64_t>& alpha,
                   const std::optional<std::vector<std::uint64_t>>& v,
                   const std::optional<std::vector<std::vector<std::uint64_t>>>& eta) {
    TwistMatrix twist(*f, k, n - k);
    if (eta) {
        if (eta->size() != static_cast<std::size_t>(k))
            fail(errc::invalid_argument, "eta must have k rows");
        for (int m = 0; m < k; ++m) {
            if ((*eta)[static_cast<std::size_t>(m)].size() != static_cast<std::size_t>(n - k))
                fail(errc::invalid_argument, "eta rows must have n-k entries");
            for (int j = 1; j <= n - k; ++j)
                twist.set(m, j, f->elt((*eta)[static_cast<std::size_t>(m)][static_cast<std::size_t>(j - 1)]));
        }
    }
    return CodeSpec::make(f, n, k, to_elts(f, alpha), v ? to_elts(f, *v) : std::vector<Elt>{},
                          std::move(twist));
}

py::dict report_dict(const MdsReport& r) {
    py::dict d;
    d["mds"] = r.mds;
    d["method"] = mds_method_name(r.method);
    d["failing_subsets"] = r.failing_subsets;
    d["novelty"] = novelty_name(r.novelty);
    return d;
}

MdsMethod method_from_name(const std::string& s) {
    if (s == "criterion") return MdsMethod::criterion;
    if (s == "brute-force" || s == "brute") return MdsMethod::brute_force;
    if (s == "both") return MdsMethod::both;
    fail(errc::invalid_argument, "method must be criterion, brute or both");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact finite-field toolkit for arbitrary-twist generalized Reed-Solomon codes";

    py::register_exception<Error>(m, "Error");

    py::class_<FieldCtx, std::shared_ptr<FieldCtx>>(m, "Field")
        .def(py::init([](std::uint64_t p, unsigned mm,
                         const std::optional<std::vector<std::uint32_t>>& modulus) {
                 return std::const_pointer_cast<FieldCtx>(make_field(p, mm, modulus));
             }),
             py::arg("p"), py::arg("m") = 1, py::arg("modulus") = std::nullopt)
        .def_property_readonly("p", &FieldCtx::p)
        .def_property_readonly("m", &FieldCtx::m)
        .def_property_readonly("q", &FieldCtx::q)
        .def_property_readonly("modulus", &FieldCtx::modulus)
        .def("add", [](const FieldCtx& f, std::uint32_t a, std::uint32_t b) { return (f.elt(a) + f.elt(b)).value(); })
        .def("sub", [](const FieldCtx& f, std::uint32_t a, std::uint32_t b) { return (f.elt(a) - f.elt(b)).value(); })
        .def("mul", [](const FieldCtx& f, std::uint32_t a, std::uint32_t b) { return (f.elt(a) * f.elt(b)).value(); })
        .def("neg", [](const FieldCtx& f, std::uint32_t a) { return (-f.elt(a)).value(); })
        .def("inv", [](const FieldCtx& f, std::uint32_t a) { return f.inv(f.elt(a)).value(); })
        .def("pow", [](const FieldCtx& f, std::uint32_t a, long long e) { return f.pow(f.elt(a), e).value(); })
        .def("__repr__", &FieldCtx::name);

    m.def("make_field",
          [](std::uint64_t p, unsigned mm, const std::optional<std::vector<std::uint32_t>>& modulus) {
              return std::const_pointer_cast<FieldCtx>(make_field(p, mm, modulus));
          },
          py::arg("p"), py::arg("m") = 1, py::arg("modulus") = std::nullopt);

    m.def("poly_from_roots", [](const Field& f, const std::vector<std::uint64_t>& roots) {
        Poly g = poly_from_roots(*f, to_elts(f, roots));
        return from_elts(g.coeffs());
    });
    m.def("poly_eval", [](const Field& f, const std::vector<std::uint64_t>& coeffs, std::uint64_t x) {
        return Poly(*f, to_elts(f, coeffs)).eval(f->elt(x)).value();
    });
    m.def("poly_derivative", [](const Field& f, const std::vector<std::uint64_t>& coeffs) {
        return from_elts(poly_derivative(Poly(*f, to_elts(f, coeffs))).coeffs());
    });
    m.def("u_weights", [](const Field& f, const std::vector<std::uint64_t>& alpha) {
        return from_elts(u_weights(*f, to_elts(f, alpha)));
    });

    m.def("wseq_direct", [](const Field& f, const std::vector<std::uint64_t>& alpha, long t) {
        return wseq_direct(*f, to_elts(f, alpha), t).value();
    });
    m.def("wseq_window", [](const Field& f, const std::vector<std::uint64_t>& alpha, long lo, long hi) {
        WSeq w(*f, to_elts(f, alpha), lo, hi);
        std::vector<std::uint64_t> out;
        for (long t = lo; t <= hi; ++t) out.push_back(w.at(t).value());
        return out;
    });

    m.def("vandermonde", [](const Field& f, const std::vector<std::uint64_t>& alpha, std::size_t ncols) {
        return from_mat(vandermonde(*f, to_elts(f, alpha), ncols));
    });
    m.def("vandermonde_inverse_explicit", [](const Field& f, const std::vector<std::uint64_t>& alpha) {
        return from_mat(vandermonde_inverse_explicit(*f, to_elts(f, alpha)));
    });
    m.def("vandermonde_inverse_factored", [](const Field& f, const std::vector<std::uint64_t>& alpha) {
        return from_mat(vandermonde_inverse_factored(*f, to_elts(f, alpha)));
    });
    m.def("bordered_vandermonde_ratio",
          [](const Field& f, const std::vector<std::uint64_t>& alpha, long t) {
              return bordered_vandermonde_ratio(*f, to_elts(f, alpha), t).value();
          });
    m.def("gaussian_inverse", [](const Field& f, const std::vector<std::vector<std::uint64_t>>& rows) {
        return from_mat(gaussian_inverse(to_mat(f, rows)));
    });
    m.def("det", [](const Field& f, const std::vector<std::vector<std::uint64_t>>& rows) {
        return det(to_mat(f, rows)).value();
    });

    m.def("toeplitz_lower", [](const Field& f, const std::vector<std::uint64_t>& col, std::size_t size) {
        return from_mat(toeplitz_lower(*f, to_elts(f, col), size));
    });
    m.def("toeplitz_inverse_unit",
          [](const Field& f, const std::vector<std::uint64_t>& col, std::size_t size,
             const std::vector<std::uint64_t>& alpha) {
              return from_mat(toeplitz_inverse_unit(*f, to_elts(f, col), size, to_elts(f, alpha)));
          });
    m.def("toeplitz_inverse_reversed",
          [](const Field& f, const std::vector<std::uint64_t>& col,
             const std::vector<std::uint64_t>& alpha) {
              return from_mat(toeplitz_inverse_reversed(*f, to_elts(f, col), to_elts(f, alpha)));
          });

    py::class_<CodeSpec>(m, "CodeSpec")
        .def(py::init(&make_spec), py::arg("field"), py::arg("n"), py::arg("k"), py::arg("alpha"),
             py::arg("v") = std::nullopt, py::arg("eta") = std::nullopt)
        .def_static("from_json",
                    [](const std::string& text) { return parse_code_spec(json::parse(text)); })
        .def("to_json", [](const CodeSpec& s) { return code_spec_to_json(s).dump(); })
        .def_property_readonly("field", [](const CodeSpec& s) { return s.field; })
        .def_readonly("n", &CodeSpec::n)
        .def_readonly("k", &CodeSpec::k)
        .def_property_readonly("alpha", [](const CodeSpec& s) { return from_elts(s.alpha); })
        .def_property_readonly("v", [](const CodeSpec& s) { return from_elts(s.v); })
        .def_property_readonly("eta", [](const CodeSpec& s) { return from_mat(s.twist.matrix()); });

    m.def("generator_matrix", [](const CodeSpec& s) { return from_mat(generator_matrix(s)); });
    m.def("encode", [](const CodeSpec& s, const std::vector<std::uint64_t>& msg) {
        return from_elts(encode(s, to_elts(s.field, msg)));
    });
    m.def("is_mds",
          [](const CodeSpec& s, const std::string& method, bool full_report, int jobs) {
              return report_dict(is_mds(s, method_from_name(method), full_report, jobs));
          },
          py::arg("spec"), py::arg("method") = "criterion", py::arg("full_report") = false,
          py::arg("jobs") = 1);
    m.def("criterion_det", [](const CodeSpec& s, const std::vector<int>& subset_one_based) {
        std::vector<int> idx;
        for (int i : subset_one_based) idx.push_back(i - 1);
        return criterion_det(s, subset_context(s, idx)).value();
    });
    m.def("special_case_mds", &special_case_mds, py::arg("spec"), py::arg("hook"), py::arg("twistpos"));
    m.def("classify_novelty", [](const CodeSpec& s) { return std::string(novelty_name(classify_novelty(s.twist))); });
    m.def("classify_novelty_eta",
          [](const Field& f, const std::vector<std::vector<std::uint64_t>>& eta) {
              return std::string(novelty_name(classify_novelty(TwistMatrix(to_mat(f, eta)))));
          });

    m.def("zhang_generator",
          [](const Field& f, int k, std::uint64_t eta, const std::vector<std::uint64_t>& alpha,
             const std::optional<std::vector<std::uint64_t>>& v) {
              auto a = to_elts(f, alpha);
              auto vv = v ? to_elts(f, *v) : std::vector<Elt>(a.size(), f->one());
              return from_mat(zhang_generator(*f, k, f->elt(eta), a, vv));
          },
          py::arg("field"), py::arg("k"), py::arg("eta"), py::arg("alpha"), py::arg("v") = std::nullopt);
    m.def("parity_check_zhang",
          [](const Field& f, int n, int k, int l, std::uint64_t eta,
             const std::vector<std::uint64_t>& alpha,
             const std::optional<std::vector<std::uint64_t>>& v) {
              auto a = to_elts(f, alpha);
              auto vv = v ? to_elts(f, *v) : std::vector<Elt>(a.size(), f->one());
              return from_mat(parity_check_zhang(*f, n, k, l, f->elt(eta), a, vv));
          },
          py::arg("field"), py::arg("n"), py::arg("k"), py::arg("l"), py::arg("eta"),
          py::arg("alpha"), py::arg("v") = std::nullopt);

    m.def("search",
          [](const std::string& config_json, int jobs) {
              SearchConfig cfg = SearchConfig::parse(json::parse(config_json));
              return run_report_to_json(run_search(cfg, jobs)).dump();
          },
          py::arg("config_json"), py::arg("jobs") = 1);

    m.attr("__version__") = "0.1.0";
}
