#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qdec {

// Coarse classification used by the CLI to pick an exit code:
// validation -> 1, numeric -> 2, io -> 3.
enum class error_category { validation, numeric, io };

class error : public std::runtime_error {
public:
    error(error_category cat, const std::string& msg)
        : std::runtime_error(msg), cat_(cat) {}

    error_category category() const noexcept { return cat_; }

private:
    error_category cat_;
};

// Base of the q-exponential is zero while the exponent is negative.
class pole_error : public error {
public:
    explicit pole_error(const std::string& msg) : error(error_category::numeric, msg) {}
};

// Base of the q-exponential lies on the negative real axis with a
// non-integer exponent; the principal branch is discontinuous there.
class branch_cut_error : public error {
public:
    explicit branch_cut_error(const std::string& msg) : error(error_category::numeric, msg) {}
};

class index_error : public error {
public:
    explicit index_error(const std::string& msg) : error(error_category::validation, msg) {}
};

// Fock-space truncation too small for the requested distribution.
class truncation_error : public error {
public:
    truncation_error(const std::string& msg, std::size_t required_dim)
        : error(error_category::numeric, msg), required_dim_(required_dim) {}

    std::size_t required_dim() const noexcept { return required_dim_; }

private:
    std::size_t required_dim_;
};

class not_hermitian_error : public error {
public:
    explicit not_hermitian_error(const std::string& msg) : error(error_category::validation, msg) {}
};

// A domain-type invariant (trace, normalization, monotone grid, ...) failed.
class invariant_error : public error {
public:
    explicit invariant_error(const std::string& msg) : error(error_category::validation, msg) {}
};

class step_size_error : public error {
public:
    explicit step_size_error(const std::string& msg) : error(error_category::validation, msg) {}
};

// q = 1 has no finite validity horizon.
class divergent_horizon_error : public error {
public:
    explicit divergent_horizon_error(const std::string& msg) : error(error_category::validation, msg) {}
};

class grid_mismatch_error : public error {
public:
    explicit grid_mismatch_error(const std::string& msg) : error(error_category::validation, msg) {}
};

class config_error : public error {
public:
    explicit config_error(const std::string& msg) : error(error_category::validation, msg) {}
};

class io_error : public error {
public:
    explicit io_error(const std::string& msg) : error(error_category::io, msg) {}
};

} // namespace qdec
