#pragma once

#include <stdexcept>
#include <string>

namespace herbrand {

// Base class for everything thrown by this library.
class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class filtration_errc {
    invalid_prime,
    empty_orders,
    nonpositive_order,
    not_nonincreasing,
    not_divisibility_chain,
    wild_part_not_p_power,
    tame_quotient_not_coprime,
    higher_quotient_not_p_power,
    nonterminating_sequence,
    index_below_minus_one,
    trivial_extension,
    unramified_extension,
};

class filtration_error : public error {
  public:
    filtration_error(filtration_errc code, const std::string& message)
        : error(message), code_(code) {}
    filtration_errc code() const { return code_; }

  private:
    filtration_errc code_;
};

enum class function_errc {
    negative_argument,
    not_invertible,
    invalid_breakpoints,
};

class function_error : public error {
  public:
    function_error(function_errc code, const std::string& message)
        : error(message), code_(code) {}
    function_errc code() const { return code_; }

  private:
    function_errc code_;
};

enum class depth_errc {
    negative_depth,
    zero_depth,
    nonpositive_epsilon,
};

class depth_error : public error {
  public:
    depth_error(depth_errc code, const std::string& message)
        : error(message), code_(code) {}
    depth_errc code() const { return code_; }

  private:
    depth_errc code_;
};

enum class catalog_errc {
    m_not_coprime_to_p,
    nonpositive_m,
    even_break,
    n_too_small,
    parameter_too_large,
    unknown_family,
    missing_param,
    unexpected_param,
};

class catalog_error : public error {
  public:
    catalog_error(catalog_errc code, const std::string& message)
        : error(message), code_(code) {}
    catalog_errc code() const { return code_; }

  private:
    catalog_errc code_;
};

enum class parse_errc {
    syntax,
    unknown_directive,
    duplicate_directive,
    validation,
};

// Parse failures always carry a 1-based source position.
class parse_error : public error {
  public:
    parse_error(parse_errc kind, int line, int column, const std::string& message)
        : error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          kind_(kind),
          line_(line),
          column_(column) {}
    parse_errc kind() const { return kind_; }
    int line() const { return line_; }
    int column() const { return column_; }

  private:
    parse_errc kind_;
    int line_;
    int column_;
};

}  // namespace herbrand
