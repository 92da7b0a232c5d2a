#ifndef CONVPROD_CONV_HPP
#define CONVPROD_CONV_HPP

#include <vector>

#include "convprod/grid.hpp"

namespace convprod {

// Circular index interval [start, start+len) mod n. len = 0 means empty.
struct Support {
  int start = 0;
  int len = 0;

  friend bool operator==(const Support&, const Support&) = default;
};

// Smallest circular interval containing every exact nonzero; ties between
// equally short intervals go to the smallest start index.
Support minimal_support(const std::vector<double>& v);

bool support_contains(const Support& s, int index, int n);

// Centered circular convolution (f # g)[a] = sum_j f[(a-j+n/2) mod n] g[j].
// The n/2 shift makes the impulse at the origin sample the identity element.
Signal centered_cconv(const Signal& f, const Signal& g);

// Adjoint pairing: out[j] = sum_a f[(a-j+n/2) mod n] v[a], so that
// dot(centered_cconv(f,g), v) == dot(g, centered_ccorr(f,v)).
Signal centered_ccorr(const Signal& f, const Signal& v);

// Same result as centered_cconv for f supported on a circular interval of
// length q and g on one of length p, via overlap-add sectioning; work scales
// like (p+q) log2(min(p,q)+1). Throws contract_error if a nonzero entry sits
// outside every interval of the declared length.
Signal overlap_add_cconv(const Signal& f, const Signal& g, int q, int p);

}  // namespace convprod

#endif
