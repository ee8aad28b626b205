#pragma once

#include <string>
#include <vector>

namespace satip::cli {

// Printed Kronecker stretching data: odd and even constituents and the
// printed rational function, as ascending coefficient lists.
struct KroneckerFixture {
  std::vector<long> lambda, mu, pi;
  std::vector<std::string> odd, even;
  std::vector<std::string> numerator, denominator;
};

// Printed constituents of the Hilbert quasi-polynomial of C[x_1..x_k]^{S_k},
// residues 1..period in order.
struct SymInvFixture {
  long k;
  std::vector<std::vector<std::string>> constituents;
};

// Printed Hilbert polynomial of G/P_lambda for SL_k.
struct GpFixture {
  long k;
  std::vector<long> lambda;
  std::vector<std::string> coefficients;
};

const std::vector<KroneckerFixture>& kronecker_fixtures();
const std::vector<SymInvFixture>& syminv_fixtures();
const std::vector<GpFixture>& gp_fixtures();

}  // namespace satip::cli
