#pragma once

#include <functional>
#include <map>
#include <vector>

#include "postlie/freealg.hpp"

namespace postlie {

/// Tuple of nonnegative integers. Compositions are Indices with positive entries.
using Index = std::vector<int>;
using Composition = std::vector<int>;

int abs_sum(const Index& k);

/// Ordinary binomial; 0 when k < 0, k > n or n < 0.
Q binom(long n, long k);
/// Binomial of (k-1, l-1) with the ari conventions at k = 0 or l = 0.
Q ari_binom(int k, int l);
/// m_{k,l}; throws std::invalid_argument on length mismatch. Negative entries give 0.
Q ari_mult(const Index& k, const Index& l);
/// Smallest j with a1+...+aj >= a; 0 if alpha is empty or a > |alpha|.
int threshold(int a, const Composition& alpha);

Q bernoulli(int k);
Q factorial(int n);
/// B1(m,n) = (1/m!) sum_{k<n} binom(m,k) B_k.
Q b1(int m, int n);
/// Scaled family B_t(m,n), from the generating series; B_1 = b1.
Q b_t(int m, int n, const Q& t);
Q uri_mult(int a, const Composition& alpha);

/// Multiplicity family (length, threshold index) -> scalar, with B(1,1) = 1.
using MultFamily = std::function<Q(int, int)>;
MultFamily uri_family();
MultFamily bt_family(const Q& t);
MultFamily constant_family(const Q& c);
/// mu^B_{a,alpha}: B(len, threshold) or 0; 0 if alpha is not a composition or a < 1.
Q family_mult(const MultFamily& B, int a, const Index& alpha);

std::vector<Composition> compositions(int n, int s);
/// All compositions of n, by length then lexicographically.
std::vector<Composition> compositions(int n);
/// Weak compositions (entries >= 0) of n into s parts.
std::vector<Index> weak_compositions(int n, int s);
/// Indices l with 0 <= l <= k componentwise and m_{k,l} != 0.
std::vector<Index> lowerings(const Index& k);

using SignedIndexSum = std::map<Index, Q>;
void add_to(SignedIndexSum& s, const Index& k, const Q& c);
SignedIndexSum single(const Index& k);
SignedIndexSum index_shuffle(const Index& k, const Index& l);
SignedIndexSum index_shuffle(const SignedIndexSum& a, const SignedIndexSum& b);
SignedIndexSum index_reverse_signed(const Index& k);
/// Bilinear concatenation.
SignedIndexSum index_concat(const SignedIndexSum& a, const SignedIndexSum& b);
Q mu_linear(int a, const SignedIndexSum& s, const MultFamily& B);

}  // namespace postlie
