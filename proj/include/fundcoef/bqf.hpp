#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <vector>

namespace fundcoef::bqf {

// Binary quadratic form a x^2 + b xy + c y^2, identified with the
// semi-integral matrix [a, b/2; b/2, c].
struct BQF {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    std::int64_t disc() const { return b * b - 4 * a * c; }
    bool positive_definite() const { return a > 0 && disc() < 0; }
    std::int64_t operator()(std::int64_t x, std::int64_t y) const { return a * x * x + b * x * y + c * y * y; }
    std::int64_t content() const;

    friend auto operator<=>(const BQF&, const BQF&) = default;
};

std::ostream& operator<<(std::ostream& os, const BQF& f);

// Integer 2x2 matrix [[a, b], [c, d]].
struct Matrix2 {
    std::int64_t a = 1;
    std::int64_t b = 0;
    std::int64_t c = 0;
    std::int64_t d = 1;

    std::int64_t det() const { return a * d - b * c; }
    friend Matrix2 operator*(const Matrix2& x, const Matrix2& y)
    {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

std::ostream& operator<<(std::ostream& os, const Matrix2& m);

// A^T T A, i.e. the form (x, y) -> f(A (x, y)^T).
BQF transform(const BQF& f, const Matrix2& m);

// |b| <= a <= c, with b >= 0 when |b| = a or a = c.
bool is_reduced(const BQF& f);

struct Reduction {
    BQF form;
    Matrix2 transform; // in SL2(Z), with bqf::transform(input, transform) == form
};

// Unique reduced representative of the SL2(Z)-class of a positive definite
// form. DomainError for forms that are not positive definite.
Reduction reduce(const BQF& f);

// All reduced forms of discriminant -d (d > 0, -d = 0, 1 mod 4), ordered by
// a, then |b|, then b > 0 before b < 0. Non-primitive forms are included.
std::vector<BQF> reduced_forms(std::int64_t d);

// Number of primitive reduced forms of discriminant -d; for fundamental -d
// this is reduced_forms(d).size().
std::int64_t class_number(std::int64_t d);

bool is_primitive(const BQF& f);
bool is_fundamental(const BQF& f);

// Dirichlet composition of primitive forms of equal discriminant, reduced.
BQF compose(const BQF& f, const BQF& g);

// Cl_K for K = Q(sqrt(-d)), -d fundamental. Classes are the reduced forms;
// class (a, b, c) corresponds to the ideal class of a Z + ((-b + sqrt(-d))/2) Z.
struct Generator {
    int index;
    int order;
};

class ClassGroup {
public:
    // DomainError "non-maximal order unsupported" unless -d is fundamental.
    explicit ClassGroup(std::int64_t d);

    std::int64_t disc() const { return -d_; }
    int h() const { return static_cast<int>(reduced_.size()); }
    const std::vector<BQF>& reduced() const { return reduced_; }
    const std::vector<Generator>& generators() const { return generators_; }

    int identity() const { return 0; }
    int compose(int i, int j) const { return table_[static_cast<std::size_t>(i * h() + j)]; }
    int inverse(int i) const;
    int index_of(const BQF& f) const; // f need not be reduced
    // Exponents e with class i = prod generator_j^(e_j), 0 <= e_j < order_j.
    const std::vector<int>& coordinates(int i) const { return coordinates_[static_cast<std::size_t>(i)]; }

private:
    std::int64_t d_;
    std::vector<BQF> reduced_;
    std::map<BQF, int> index_;
    std::vector<int> table_;
    std::vector<Generator> generators_;
    std::vector<std::vector<int>> coordinates_;
};

ClassGroup class_group(std::int64_t d);

// Character of Cl_K: one exponent per cyclic generator, modulo its order.
struct ClassCharacter {
    std::vector<int> exponents;

    friend bool operator==(const ClassCharacter&, const ClassCharacter&) = default;
};

// All h characters; index 0 is trivial, order is mixed-radix in the
// exponent vector with the last generator fastest.
std::vector<ClassCharacter> characters(const ClassGroup& g);
ClassCharacter inverse(const ClassGroup& g, const ClassCharacter& chi);
std::complex<double> char_eval(const ClassGroup& g, const ClassCharacter& chi, int class_index);

struct PrimeRepresentation {
    std::int64_t p;
    std::int64_t x0;
    std::int64_t y0;
    // SL2(Z) matrix whose second column is (x0, y0), so that
    // transform(f, A) has lower-right coefficient c = p.
    Matrix2 a;
};

// Smallest odd prime p, not dividing avoid, represented as f(x0, y0) with
// x0 >= 0, |x0|, |y0| <= search_bound. Ties prefer smaller max(|x0|, |y0|),
// then y0 >= 0, then smaller x0. DomainError for non-primitive f;
// PrecisionError "search bound exhausted" when nothing is found.
PrimeRepresentation find_prime_represented(const BQF& f, std::int64_t avoid, std::int64_t search_bound);

} // namespace fundcoef::bqf
