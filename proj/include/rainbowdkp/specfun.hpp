#ifndef RAINBOWDKP_SPECFUN_HPP
#define RAINBOWDKP_SPECFUN_HPP

namespace rdkp {

// Pochhammer symbol (a)_n = a (a+1) ... (a+n-1); 1 for n = 0.
double pochhammer(double a, int n);

// Kummer's confluent hypergeometric function 1F1(a; b; z).
//
// When a is a non-positive integer -n (within 1e-12) the exact degree-n
// polynomial is summed; otherwise the power series runs until the term
// drops below 1e-16 of the partial sum (cap 1e5 terms, ConvergenceError
// beyond).  b must not be a non-positive integer.
double kummer_1f1(double a, double b, double z);

// d/dz 1F1(a; b; z) = (a/b) 1F1(a+1; b+1; z)
double kummer_1f1_prime(double a, double b, double z);

// Generalized Laguerre polynomial L_n^{(a)}(z) by the three-term recurrence.
double laguerre(int n, double a, double z);

}  // namespace rdkp

#endif
