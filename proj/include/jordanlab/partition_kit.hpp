#pragma once

#include "jordanlab/bigint.hpp"
#include "jordanlab/partition.hpp"

#include <map>
#include <string>
#include <vector>

namespace jordanlab {

/// Dimension of the simple symmetric-group module S(Y) (hook length formula).
BigInt dim_sn(const Partition& y);

/// Dimension of L(Y; D) (hook-content formula); zero when height(Y) > D.
BigInt dim_gl(const Partition& y, int d);

/// Virtual class in K_0(S_n): integer combination of simple modules [Y], |Y| = n.
class VirtualSymClass {
public:
    using Coeffs = std::map<Partition, BigInt>;

    explicit VirtualSymClass(int n) : n_(n) {}
    VirtualSymClass(int n, std::initializer_list<std::pair<Partition, long>> terms);

    int n() const { return n_; }
    const Coeffs& coeffs() const { return coeffs_; }
    BigInt coeff(const Partition& y) const;
    void add(const Partition& y, const BigInt& c);
    bool is_zero() const { return coeffs_.empty(); }

    /// Sum of c_Y * dim S(Y).
    BigInt dimension() const;

    VirtualSymClass& operator+=(const VirtualSymClass& o);
    VirtualSymClass& operator-=(const VirtualSymClass& o);
    friend VirtualSymClass operator+(VirtualSymClass a, const VirtualSymClass& b) { return a += b; }
    friend VirtualSymClass operator-(VirtualSymClass a, const VirtualSymClass& b) { return a -= b; }
    friend bool operator==(const VirtualSymClass&, const VirtualSymClass&) = default;

    /// "2[4,1,1,1,1] + [3,2,1,1,1]"
    std::string str() const;

private:
    int n_;
    Coeffs coeffs_;
};

/// Diagrams obtained from y by deleting / adding one box.
std::vector<Partition> removable(const Partition& y);
std::vector<Partition> addable(const Partition& y);

VirtualSymClass restrict(const VirtualSymClass& c);
VirtualSymClass induce(const VirtualSymClass& c);

/// Ind(Res(cM)) - cM: the class of the multilinear missing derivations MD(D+1) from [M(D)].
VirtualSymClass md_class_from_m(const VirtualSymClass& c_m);

/// The S_{D+1}-class of the multilinear missing tetrads M(D) for D <= 7; zero for D <= 3.
VirtualSymClass known_m_class(int d);

/// Reference [MD(8)] list, transcribed verbatim including its defects.
/// Its diagram "2^2,4" is not weakly decreasing and is read as (4,2,2).
VirtualSymClass reference_md8_class();

/// dim M_n(D), 1 <= n <= 7 (zero for n < 4). Throws std::out_of_range otherwise.
BigInt closed_dim_M(int n, int d);

/// dim MD_n(D), 1 <= n <= 7 (zero for n <= 4). Throws std::out_of_range otherwise.
BigInt closed_dim_MD(int n, int d);

struct C1Report {
    bool pass = true;
    std::vector<std::string> violations;
};

/// Column constraints on the diagrams occurring in [M(D)].
C1Report check_c1_constraint(const VirtualSymClass& c, int d);

} // namespace jordanlab
