#include "seq2adic/adic.hpp"
#include "seq2adic/numtheory.hpp"
#include "seq2adic/sequence.hpp"
#include "seq2adic/verify.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

namespace py = pybind11;

namespace pybind11::detail {

// mpz_class <-> Python int, bridged through decimal strings.  The values in
// this library routinely exceed 64 bits, so everything big-integer-valued
// crosses the boundary as a native Python int.
template <>
struct type_caster<mpz_class> {
    PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        value = mpz_class(std::string(py::str(src)), 10);
        return true;
    }

    static handle cast(const mpz_class& v, return_value_policy, handle) {
        return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

using namespace seq2adic;

std::vector<std::uint8_t> as_bits(const std::vector<int>& raw) {
    std::vector<std::uint8_t> bits;
    bits.reserve(raw.size());
    for (int b : raw) {
        if (b != 0 && b != 1) throw std::domain_error("bits must be 0 or 1");
        bits.push_back(static_cast<std::uint8_t>(b));
    }
    return bits;
}

}  // namespace

PYBIND11_MODULE(_seq2adic, m) {
    m.doc() = "Exact 2-adic complexity of generalized binary sequences of order 2 over Z_pq";

    py::class_<PrimePair>(m, "PrimePair")
        .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("p"), py::arg("q"))
        .def_property_readonly("p", &PrimePair::p)
        .def_property_readonly("q", &PrimePair::q)
        .def_property_readonly("n", &PrimePair::n)
        .def(py::self == py::self)
        .def("__repr__", [](const PrimePair& pp) {
            return "PrimePair(p=" + std::to_string(pp.p()) + ", q=" + std::to_string(pp.q()) + ")";
        });

    py::enum_<ResidueClass>(m, "ResidueClass")
        .value("ZERO", ResidueClass::Zero)
        .value("MULT_OF_P", ResidueClass::MultOfP)
        .value("MULT_OF_Q", ResidueClass::MultOfQ)
        .value("UNIT", ResidueClass::Unit);

    py::class_<BinarySequence>(m, "BinarySequence")
        .def_property_readonly("pair", &BinarySequence::pair)
        .def_property_readonly("n", &BinarySequence::n)
        .def("bits", [](const BinarySequence& s) {
            return std::vector<int>(s.bits().begin(), s.bits().end());
        })
        .def("bit", &BinarySequence::bit, py::arg("i"))
        .def("ones_count", &BinarySequence::ones_count)
        .def("bit_string", &BinarySequence::to_bit_string)
        .def("hex_string", &BinarySequence::to_hex_string)
        .def("__len__", &BinarySequence::n)
        .def("__repr__", [](const BinarySequence& s) {
            return "BinarySequence(p=" + std::to_string(s.pair().p()) +
                   ", q=" + std::to_string(s.pair().q()) + ", n=" + std::to_string(s.n()) + ")";
        });

    py::class_<GaussSums>(m, "GaussSums")
        .def_readonly("g_p", &GaussSums::g_p)
        .def_readonly("g_q", &GaussSums::g_q);

    py::class_<DefinitionalComplexity>(m, "DefinitionalComplexity")
        .def_readonly("n", &DefinitionalComplexity::n)
        .def_readonly("s2", &DefinitionalComplexity::s2)
        .def_readonly("d", &DefinitionalComplexity::d)
        .def_readonly("c2_bits", &DefinitionalComplexity::c2_bits)
        .def_readonly("is_max", &DefinitionalComplexity::is_max);

    py::class_<ClosedForm>(m, "ClosedForm")
        .def_readonly("d1", &ClosedForm::d1)
        .def_readonly("d2", &ClosedForm::d2)
        .def_readonly("c2_bits", &ClosedForm::c2_bits);

    py::class_<ShortcutConditions>(m, "ShortcutConditions")
        .def_readonly("d1_forced_one", &ShortcutConditions::d1_forced_one)
        .def_readonly("d2_forced_one", &ShortcutConditions::d2_forced_one);

    py::class_<CongruenceSides>(m, "CongruenceSides")
        .def_readonly("lhs", &CongruenceSides::lhs)
        .def_readonly("rhs", &CongruenceSides::rhs);

    py::class_<ComplexityReport>(m, "ComplexityReport")
        .def_readonly("pair", &ComplexityReport::pair)
        .def_readonly("n", &ComplexityReport::n)
        .def_readonly("s2", &ComplexityReport::s2)
        .def_readonly("d", &ComplexityReport::d)
        .def_readonly("d1", &ComplexityReport::d1)
        .def_readonly("d2", &ComplexityReport::d2)
        .def_readonly("d3", &ComplexityReport::d3)
        .def_readonly("closed_d1", &ComplexityReport::closed_d1)
        .def_readonly("closed_d2", &ComplexityReport::closed_d2)
        .def_readonly("c2_bits", &ComplexityReport::c2_bits)
        .def_readonly("is_max", &ComplexityReport::is_max);

    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("name", &CheckResult::name)
        .def_readonly("passed", &CheckResult::passed)
        .def_readonly("detail", &CheckResult::detail);

    py::class_<VerificationCertificate>(m, "VerificationCertificate")
        .def_readonly("pair", &VerificationCertificate::pair)
        .def_readonly("checks", &VerificationCertificate::checks)
        .def_readonly("all_passed", &VerificationCertificate::all_passed);

    py::class_<SweepEntry>(m, "SweepEntry")
        .def_readonly("report", &SweepEntry::report)
        .def_readonly("certificate", &SweepEntry::certificate);

    // number theory
    m.def("is_prime", &is_prime, py::arg("n"),
          "Deterministic primality; inputs above 2^64 - 1 are rejected.");
    m.def("legendre_symbol", &legendre_symbol, py::arg("a"), py::arg("p"));
    m.def("neg_one_symbol", &neg_one_symbol, py::arg("p"));
    m.def("odd_part", &odd_part, py::arg("m"));
    m.def("gcd", &seq2adic::gcd, py::arg("a"), py::arg("b"));
    m.def("mersenne", &mersenne, py::arg("n"));
    m.def("mod_mersenne", &mod_mersenne, py::arg("x"), py::arg("n"));

    // sequence
    m.def(
        "classify",
        [](std::uint64_t i, std::uint64_t p, std::uint64_t q) {
            return classify(i, PrimePair(p, q));
        },
        py::arg("i"), py::arg("p"), py::arg("q"));
    m.def(
        "generate",
        [](std::uint64_t p, std::uint64_t q) { return BinarySequence::generate(PrimePair(p, q)); },
        py::arg("p"), py::arg("q"), "One period of the sequence for the pair (p, q).");

    // adic complexity
    m.def("s_of_two",
          [](const BinarySequence& seq) { return s_of_two(seq); }, py::arg("seq"));
    m.def("s_of_two_bits",
          [](const std::vector<int>& bits) {
              const std::vector<std::uint8_t> b = as_bits(bits);
              return s_of_two(std::span(b));
          },
          py::arg("bits"));
    m.def("definitional_complexity",
          [](const BinarySequence& seq) { return definitional_complexity(seq); }, py::arg("seq"),
          "Brute-force 2-adic complexity from the definition (the oracle path).");
    m.def("definitional_complexity_bits",
          [](const std::vector<int>& bits) {
              const std::vector<std::uint8_t> b = as_bits(bits);
              return definitional_complexity(std::span(b));
          },
          py::arg("bits"));
    m.def(
        "gauss_sums",
        [](std::uint64_t p, std::uint64_t q) { return gauss_sums(PrimePair(p, q)); }, py::arg("p"),
        py::arg("q"));
    m.def(
        "closed_form",
        [](std::uint64_t p, std::uint64_t q) { return closed_form(PrimePair(p, q)); }, py::arg("p"),
        py::arg("q"));
    m.def(
        "shortcut_conditions",
        [](std::uint64_t p, std::uint64_t q) { return shortcut_conditions(PrimePair(p, q)); },
        py::arg("p"), py::arg("q"));
    m.def(
        "lower_bound",
        [](std::uint64_t p, std::uint64_t q) { return lower_bound(PrimePair(p, q)); }, py::arg("p"),
        py::arg("q"));
    m.def(
        "doubled_s2_identity",
        [](std::uint64_t p, std::uint64_t q) { return doubled_s2_identity(PrimePair(p, q)); },
        py::arg("p"), py::arg("q"));
    m.def(
        "analyze",
        [](std::uint64_t p, std::uint64_t q) { return analyze(PrimePair(p, q)); }, py::arg("p"),
        py::arg("q"), "Full complexity report: definitional, d1/d2/d3 split, closed form.");

    // verification
    m.def(
        "verify_pair",
        [](std::uint64_t p, std::uint64_t q) { return verify_pair(PrimePair(p, q)); }, py::arg("p"),
        py::arg("q"), "Run the twelve congruence checks for one pair.");
    m.def("enumerate_pairs", &enumerate_pairs, py::arg("max_n"));
    m.def("sweep", &sweep, py::arg("max_n"), py::arg("workers") = 1,
          py::call_guard<py::gil_scoped_release>(),
          "Analyze and verify every ordered pair with p*q <= max_n.");
    m.def("find_nontrivial", &find_nontrivial, py::arg("max_n"),
          "Swept pairs whose complexity is strictly below the maximum.");

    m.attr("__version__") = "0.1.0";
}
