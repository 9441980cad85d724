#include "matred/json_io.hpp"

namespace matred {

namespace {

std::uint64_t get_u64(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned())
        throw Error(Errc::InvalidInput, std::string("missing or invalid field '") + key + "'");
    return j[key].get<std::uint64_t>();
}

std::vector<std::uint64_t> get_u64_array(const Json& j) {
    if (!j.is_array()) throw Error(Errc::InvalidInput, "expected an array of integers");
    std::vector<std::uint64_t> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_unsigned()) throw Error(Errc::InvalidInput, "expected a non-negative integer");
        out.push_back(v.get<std::uint64_t>());
    }
    return out;
}

Nat nat_from_decimal(const Json& j, const char* key) {
    if (!j.contains(key)) throw Error(Errc::InvalidInput, std::string("missing field '") + key + "'");
    if (j[key].is_number_unsigned()) return nat_from_u64(j[key].get<std::uint64_t>());
    if (!j[key].is_string()) throw Error(Errc::InvalidInput, std::string(key) + " must be a decimal string");
    Nat n;
    if (mpz_set_str(n.get_mpz_t(), j[key].get<std::string>().c_str(), 10) != 0 || n < 0)
        throw Error(Errc::InvalidInput, std::string(key) + " is not a decimal natural");
    return n;
}

// element inside a known field: digit vector (low degree first) or, for
// prime fields, a bare integer
std::uint64_t raw_element_from_json(const Field& f, const Json& j) {
    if (j.is_number_unsigned()) {
        std::uint64_t v = j.get<std::uint64_t>();
        if (f->e() == 1) {
            if (v >= f->p()) throw Error(Errc::InvalidInput, "residue out of range");
            return v;
        }
        throw Error(Errc::InvalidInput, "bare-integer elements are only allowed over prime fields");
    }
    return f->encode(get_u64_array(j));
}

Json raw_element_to_json(const Field& f, std::uint64_t raw) { return Json(f->decode(raw)); }

} // namespace

Json field_to_json(const Field& f) {
    return Json{{"p", f->p()}, {"e", f->e()}, {"modulus", f->modulus()}};
}

Field field_from_json(const Json& j) {
    if (!j.is_object()) throw Error(Errc::InvalidInput, "field must be an object");
    std::uint64_t p = get_u64(j, "p");
    auto e = static_cast<unsigned>(get_u64(j, "e"));
    if (j.contains("modulus")) return make_field(p, e, get_u64_array(j["modulus"]));
    return build_field(p, e);
}

Json element_to_json(const FieldElement& el) {
    Json j = field_to_json(el.field());
    j["coeffs"] = el.coeffs();
    return j;
}

FieldElement element_from_json(const Json& j) {
    if (j.is_number_unsigned())
        throw Error(Errc::InvalidInput, "bare-integer element needs a surrounding field context");
    Field f = field_from_json(j);
    if (!j.contains("coeffs")) throw Error(Errc::InvalidInput, "element needs 'coeffs'");
    return {f, raw_element_from_json(f, j["coeffs"])};
}

Json polynomial_to_json(const Polynomial& p) {
    Json coeffs = Json::array();
    for (std::uint64_t raw : p.raw()) coeffs.push_back(raw_element_to_json(p.field(), raw));
    return Json{{"field", field_to_json(p.field())}, {"coeffs", coeffs}};
}

Polynomial polynomial_from_coeff_json(const Field& f, const Json& coeffs) {
    if (!coeffs.is_array()) throw Error(Errc::InvalidInput, "polynomial coeffs must be an array");
    std::vector<std::uint64_t> raw;
    raw.reserve(coeffs.size());
    for (const auto& c : coeffs) raw.push_back(raw_element_from_json(f, c));
    return Polynomial::from_raw(f, std::move(raw));
}

Polynomial polynomial_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("coeffs"))
        throw Error(Errc::InvalidInput, "polynomial needs 'field' and 'coeffs'");
    Field f = field_from_json(j["field"]);
    return polynomial_from_coeff_json(f, j["coeffs"]);
}

Json matrix_to_json(const SquareMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.n(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.n(); ++j) row.push_back(raw_element_to_json(m.field(), m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"field", field_to_json(m.field())}, {"n", m.n()}, {"entries", rows}};
}

namespace {
SquareMatrix matrix_from_entries(const Field& f, std::size_t n, const Json& entries) {
    if (!entries.is_array() || entries.size() != n)
        throw Error(Errc::InvalidInput, "entries must be an n x n array");
    std::vector<std::uint64_t> raw;
    raw.reserve(n * n);
    for (const auto& row : entries) {
        if (!row.is_array() || row.size() != n)
            throw Error(Errc::InvalidInput, "entries must be an n x n array");
        for (const auto& cell : row) raw.push_back(raw_element_from_json(f, cell));
    }
    return SquareMatrix::from_raw(f, n, std::move(raw));
}
} // namespace

SquareMatrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("entries"))
        throw Error(Errc::InvalidInput, "matrix needs 'field', 'n' and 'entries'");
    Field f = field_from_json(j["field"]);
    auto n = static_cast<std::size_t>(get_u64(j, "n"));
    if (n == 0) throw Error(Errc::InvalidInput, "matrix dimension must be >= 1");
    return matrix_from_entries(f, n, j["entries"]);
}

Json factorization_to_json(const Factorization& f) {
    const Field& fd = f.unit.field();
    Json factors = Json::array();
    for (const auto& [poly, mult] : f.factors) {
        Json coeffs = Json::array();
        for (std::uint64_t raw : poly.raw()) coeffs.push_back(raw_element_to_json(fd, raw));
        factors.push_back(Json{{"coeffs", coeffs}, {"multiplicity", mult}});
    }
    return Json{{"field", field_to_json(fd)},
                {"unit", raw_element_to_json(fd, f.unit.raw())},
                {"factors", factors}};
}

Factorization factorization_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("unit") || !j.contains("factors"))
        throw Error(Errc::InvalidInput, "factorization needs 'field', 'unit' and 'factors'");
    Field f = field_from_json(j["field"]);
    Factorization out;
    out.unit = FieldElement(f, raw_element_from_json(f, j["unit"]));
    for (const auto& entry : j["factors"]) {
        if (!entry.contains("coeffs") || !entry.contains("multiplicity"))
            throw Error(Errc::InvalidInput, "factor entry needs 'coeffs' and 'multiplicity'");
        out.factors.emplace_back(polynomial_from_coeff_json(f, entry["coeffs"]),
                                 get_u64(entry, "multiplicity"));
    }
    return out;
}

Json jordan_to_json(const JordanStructure& js, const Field& f) {
    Json blocks = Json::array();
    for (const auto& b : js.blocks) {
        Json coeffs = Json::array();
        for (std::uint64_t raw : b.factor.raw()) coeffs.push_back(raw_element_to_json(f, raw));
        blocks.push_back(Json{{"factor", coeffs}, {"size", b.size}, {"multiplicity", b.mult}});
    }
    return Json{{"field", field_to_json(f)}, {"n", js.n}, {"blocks", blocks}};
}

Json prime_selection_to_json(const PrimeSelection& sel) {
    return Json{{"n", sel.n},
                {"pbar", sel.pbar},
                {"primes", sel.primes},
                {"product", sel.product.get_str()},
                {"d", sel.d}};
}

Json certificate_to_json(const ReductionCertificate& cert) {
    return Json{{"n", cert.n},
                {"q", cert.q},
                {"hypothesis_ok", cert.hypothesis_ok},
                {"chosen_prime", cert.chosen_prime},
                {"a", cert.a},
                {"s_prime", cert.s_prime},
                {"m", cert.m.get_str()},
                {"purge_exponent", cert.purge_exponent.get_str()},
                {"predicted_degree", cert.predicted_degree},
                {"input_degree", cert.input_degree},
                {"notes", cert.notes}};
}

CertificateClaim certificate_claim_from_json(const Json& j) {
    CertificateClaim c;
    c.n = static_cast<std::size_t>(get_u64(j, "n"));
    c.q = get_u64(j, "q");
    if (!j.contains("hypothesis_ok") || !j["hypothesis_ok"].is_boolean())
        throw Error(Errc::InvalidInput, "missing or invalid field 'hypothesis_ok'");
    c.hypothesis_ok = j["hypothesis_ok"].get<bool>();
    c.chosen_prime = get_u64(j, "chosen_prime");
    c.a = get_u64(j, "a");
    c.s_prime = get_u64(j, "s_prime");
    c.m = nat_from_decimal(j, "m");
    c.purge_exponent = nat_from_decimal(j, "purge_exponent");
    c.predicted_degree = static_cast<std::size_t>(get_u64(j, "predicted_degree"));
    c.input_degree = static_cast<std::size_t>(get_u64(j, "input_degree"));
    return c;
}

Json diameter_report_to_json(const DiameterReport& rep) {
    Json j{{"group_order", rep.group_order},
           {"diameter", rep.diameter},
           {"eccentricity_histogram", rep.eccentricity_histogram},
           {"witness", matrix_to_json(rep.witness)},
           {"witness_word", rep.witness_word}};
    if (!rep.witness_generating_set.empty() || rep.group_order == 1)
        j["witness_generating_set"] = rep.witness_generating_set;
    return j;
}

Json low_degree_word_to_json(const LowDegreeWord& w) {
    return Json{{"word", w.word},
                {"length", w.length},
                {"budget", w.budget.get_str()},
                {"element", matrix_to_json(w.element)}};
}

Json erdos_report_to_json(const ErdosReport& rep) {
    return Json{{"n", rep.n},
                {"pbar", rep.pbar},
                {"d", rep.prime_sum},
                {"prime_count", rep.prime_count},
                {"product", rep.product.get_str()},
                {"ratio_prime_sum", rep.ratio_prime_sum},
                {"ratio_pbar", rep.ratio_pbar}};
}

Json sylow_to_json(const SylowChainSpec& spec, const Nat& value) {
    return Json{{"n", spec.n},         {"q", spec.q},
                {"p", spec.p},         {"m", spec.m},
                {"r", spec.r},         {"ell", spec.ell},
                {"r_clamped", spec.r_clamped}, {"value", value.get_str()}};
}

Json compare_report_to_json(const CompareReport& rep) {
    return Json{{"n", rep.n},
                {"q", rep.q},
                {"c_main", rep.consts.c_main},
                {"this_paper_log2", rep.this_paper_log2},
                {"biswas_yang_log2", rep.biswas_yang_log2},
                {"sl_order_log2", rep.sl_order_log2},
                {"assembly_log2", rep.assembly_log2},
                {"d", rep.prime_sum_d}};
}

std::vector<SquareMatrix> generators_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("generators"))
        throw Error(Errc::InvalidInput, "generators file needs 'field', 'n' and 'generators'");
    Field f = field_from_json(j["field"]);
    auto n = static_cast<std::size_t>(get_u64(j, "n"));
    std::vector<SquareMatrix> gens;
    for (const auto& entries : j["generators"]) gens.push_back(matrix_from_entries(f, n, entries));
    if (gens.empty()) throw Error(Errc::InvalidInput, "empty generator list");
    return gens;
}

Json generators_to_json(const std::vector<SquareMatrix>& gens) {
    Json list = Json::array();
    for (const auto& g : gens) list.push_back(matrix_to_json(g)["entries"]);
    return Json{{"field", field_to_json(gens.front().field())},
                {"n", gens.front().n()},
                {"generators", list}};
}

std::vector<Polynomial> targets_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("targets"))
        throw Error(Errc::InvalidInput, "targets file needs 'field' and 'targets'");
    Field f = field_from_json(j["field"]);
    std::vector<Polynomial> out;
    for (const auto& coeffs : j["targets"]) out.push_back(polynomial_from_coeff_json(f, coeffs));
    if (out.empty()) throw Error(Errc::InvalidInput, "empty target list");
    return out;
}

} // namespace matred
