/*
   Copyright 2026 The srbkit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "srbkit/rational.hpp"

namespace srbkit {

// Exponent vector of a monomial; length = arity of the owning polynomial.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

// Graded lexicographic order with x1 > x2 > ... > (last variable), read as
// a std::map comparator that iterates terms from the leading monomial down.
struct GrlexDescending {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial over exact rationals. No stored
// coefficient is zero; two polynomials are equal iff their term maps are.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational, GrlexDescending>;

    explicit Polynomial(int arity = 0) : arity_(arity) {}

    static Polynomial constant(int arity, Rational c);
    static Polynomial variable(int arity, int index);
    static Polynomial monomial(int arity, Exponents exps, Rational coef);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous(int d) const;
    const TermMap& terms() const { return terms_; }
    Rational coefficient(const Exponents& e) const;
    // Leading term in the canonical order; zero polynomial has none.
    Rational leading_coefficient() const;

    void add_term(const Exponents& e, const Rational& c);

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);
    Polynomial operator-() const;
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    bool operator==(const Polynomial& rhs) const { return arity_ == rhs.arity_ && terms_ == rhs.terms_; }

    // Simultaneous substitution x_i -> images[i]; all images share one arity.
    Polynomial substitute(std::span<const Polynomial> images) const;
    Rational evaluate(std::span<const Rational> point) const;
    // Sets one variable to zero (drops every term using it).
    Polynomial substitute_zero(int var) const;
    // Removes an unused variable slot, shrinking the arity by one.
    Polynomial drop_variable(int var) const;

    // Canonical text: terms in decreasing monomial order, "p/q" coefficients.
    // When last_is_z, the final variable prints as "z".
    std::string to_text(bool last_is_z = false) const;

private:
    int arity_;
    TermMap terms_;
};

// Linear form c1*x1 + ... + cn*xn + constant. Arrangement hyperplanes are
// stored as normalized central forms (constant = 0).
struct LinearForm {
    std::vector<Rational> coefficients;
    Rational constant = 0;

    int arity() const { return static_cast<int>(coefficients.size()); }
    bool is_central() const { return constant == 0; }
    // Index of the first nonzero coefficient; -1 if none.
    int first_nonzero() const;
    int nonzero_count() const;
    // Canonical scale: coprime integer entries, first nonzero coefficient
    // positive. Throws if every coefficient is zero.
    LinearForm normalized() const;
    bool proportional_to(const LinearForm& other) const;
    Polynomial to_polynomial() const;
    bool operator==(const LinearForm& rhs) const = default;
    std::string to_text(bool last_is_z = false) const;
};

std::string to_string(const Exponents& e);

// Exact multivariate division: returns q with d*q == p, or nullopt when d
// does not divide p. Throws if d is zero.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& d);

// Expands p in powers of the central form f after eliminating the first
// variable with a nonzero coefficient in f, and returns the coefficients of
// f^0 .. f^(power-1). All components vanish iff f^power divides p.
std::vector<Polynomial> remainder_components(const Polynomial& p, const LinearForm& f, int power);

bool divisible_by_linear_power(const Polynomial& p, const LinearForm& f, int power);

// Exact determinant of a square polynomial matrix (Laplace expansion with
// memoized minors).
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m);

// All exponent vectors of the given arity and total degree, in decreasing
// canonical order.
std::vector<Exponents> monomials_of_degree(int arity, int degree);

// Human-friendly rendering that pulls out candidate linear factors (tried in
// order, repeatedly); whatever does not factor is printed expanded.
std::string factored_text(const Polynomial& p, const std::vector<LinearForm>& candidates, bool last_is_z);

}  // namespace srbkit
