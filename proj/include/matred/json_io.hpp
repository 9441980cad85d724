#ifndef MATRED_JSON_IO_HPP
#define MATRED_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "matred/bounds.hpp"
#include "matred/cayley.hpp"
#include "matred/degred.hpp"

namespace matred {

using Json = nlohmann::json;

// Schemas are documented in docs/formats.md. Parsers validate everything
// (field moduli are re-checked for irreducibility) and throw matred::Error
// with InvalidInput on malformed data.

Json field_to_json(const Field& f);
Field field_from_json(const Json& j);

Json element_to_json(const FieldElement& e);
FieldElement element_from_json(const Json& j);

Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);
/// coefficient list only (each entry a digit vector or bare integer), field given
Polynomial polynomial_from_coeff_json(const Field& f, const Json& coeffs);

Json matrix_to_json(const SquareMatrix& m);
SquareMatrix matrix_from_json(const Json& j);

Json factorization_to_json(const Factorization& f);
Factorization factorization_from_json(const Json& j);

Json jordan_to_json(const JordanStructure& js, const Field& f);
Json prime_selection_to_json(const PrimeSelection& sel);

Json certificate_to_json(const ReductionCertificate& cert);
struct CertificateClaim {
    std::size_t n = 0;
    std::uint64_t q = 0;
    bool hypothesis_ok = false;
    std::uint64_t chosen_prime = 0;
    std::uint64_t a = 0;
    std::uint64_t s_prime = 1;
    Nat m = 1;
    Nat purge_exponent = 1;
    std::size_t predicted_degree = 0;
    std::size_t input_degree = 0;
};
CertificateClaim certificate_claim_from_json(const Json& j);

Json diameter_report_to_json(const DiameterReport& rep);
Json low_degree_word_to_json(const LowDegreeWord& w);
Json erdos_report_to_json(const ErdosReport& rep);
Json sylow_to_json(const SylowChainSpec& spec, const Nat& value);
Json compare_report_to_json(const CompareReport& rep);

std::vector<SquareMatrix> generators_from_json(const Json& j);
Json generators_to_json(const std::vector<SquareMatrix>& gens);
std::vector<Polynomial> targets_from_json(const Json& j);

} // namespace matred

#endif
