#ifndef LIESPEC_ERRORS_HPP
#define LIESPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liespec {

// Coarse classification used by the CLI to map failures onto its
// exit-code contract (2 = bad input, 3 = computation unsupported in the
// selected backend).
enum class errc {
    bad_input,
    unsupported,
    internal,
};

class error : public std::runtime_error {
public:
    error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    errc kind() const noexcept { return kind_; }

private:
    errc kind_;
};

struct not_a_character : error {
    explicit not_a_character(const std::string& w = "character does not vanish on the derived subalgebra")
        : error(errc::bad_input, w) {}
};

struct not_solvable : error {
    explicit not_solvable(const std::string& w = "Lie algebra is not solvable") : error(errc::bad_input, w) {}
};

struct not_nilpotent : error {
    explicit not_nilpotent(const std::string& w = "Lie algebra is not nilpotent") : error(errc::bad_input, w) {}
};

struct not_an_ideal : error {
    explicit not_an_ideal(const std::string& w = "subspace is not an ideal") : error(errc::bad_input, w) {}
};

struct not_commuting : error {
    explicit not_commuting(const std::string& w = "matrices do not commute") : error(errc::bad_input, w) {}
};

struct basis_not_adapted : error {
    explicit basis_not_adapted(const std::string& w = "basis does not have the triangular ideal-flag shape")
        : error(errc::bad_input, w) {}
};

struct irrational_spectrum : error {
    explicit irrational_spectrum(const std::string& w =
                                     "characteristic polynomial has a factor of degree >= 2 over the "
                                     "Gaussian rationals; rerun with the float backend")
        : error(errc::unsupported, w) {}
};

struct adaptation_failed : error {
    explicit adaptation_failed(const std::string& w =
                                   "no Gaussian-rational common eigenvector found while refining the "
                                   "ideal flag; supply an adapted basis or rerun with the float backend")
        : error(errc::unsupported, w) {}
};

struct no_common_eigenvector : error {
    explicit no_common_eigenvector(const std::string& w = "numerical common-eigenvector search failed")
        : error(errc::unsupported, w) {}
};

struct empty_spectrum : error {
    explicit empty_spectrum(const std::string& w = "computed spectrum is empty; candidate generation is defective")
        : error(errc::internal, w) {}
};

struct chain_condition_failed : error {
    explicit chain_condition_failed(const std::string& w = "d_{p-1} d_p != 0; differential assembly is defective")
        : error(errc::internal, w) {}
};

struct parse_error : error {
    explicit parse_error(const std::string& w) : error(errc::bad_input, w) {}
};

} // namespace liespec

#endif
