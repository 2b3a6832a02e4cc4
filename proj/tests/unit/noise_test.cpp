#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qcevo/noise.hpp"
#include "qcevo/statevector.hpp"
#include "test_util.hpp"

namespace {

using qcevo::CircuitGenome;
using qcevo::Gate;
using qcevo::GateKind;
using qcevo::MeasurementRecord;
using qcevo::NoiseModel;

constexpr double kPi = std::numbers::pi;

NoiseModel make_noise(double p, double q) {
  NoiseModel noise;
  noise.two_qubit_depolarizing_p = p;
  noise.readout_flip_q = q;
  return noise;
}

CircuitGenome entangling_pair() {
  CircuitGenome genome;
  genome.num_qubits = 2;
  genome.gates = {{GateKind::RY, 0, -1, 1.2},
                  {GateKind::CRX, 0, 1, 2.3},
                  {GateKind::RZZ, 0, 1, 0.7}};
  return genome;
}

TEST(Noise, ValidateRejectsOutOfRangeProbabilities) {
  EXPECT_NO_THROW(make_noise(0.0, 0.0).validate());
  EXPECT_NO_THROW(make_noise(1.0, 1.0).validate());
  EXPECT_THROW(make_noise(-0.1, 0.0).validate(), std::invalid_argument);
  EXPECT_THROW(make_noise(0.0, 1.5).validate(), std::invalid_argument);
  EXPECT_THROW(sample_noisy(entangling_pair(), 8, make_noise(2.0, 0.0), 1),
               std::invalid_argument);
}

TEST(Noise, ZeroNoiseReproducesIdealSamplerExactly) {
  const CircuitGenome genome = entangling_pair();
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const MeasurementRecord ideal = sample(run_circuit(genome), 1024, seed);
    const MeasurementRecord noisy = sample_noisy(genome, 1024, make_noise(0.0, 0.0), seed);
    EXPECT_EQ(ideal, noisy) << "seed " << seed;
  }
}

TEST(Noise, IsZeroDetectsDisabledChannels) {
  EXPECT_TRUE(make_noise(0.0, 0.0).is_zero());
  EXPECT_FALSE(make_noise(0.01, 0.0).is_zero());
  EXPECT_FALSE(make_noise(0.0, 0.02).is_zero());
}

TEST(Noise, RecordsAreSeedDeterministic) {
  const CircuitGenome genome = entangling_pair();
  const NoiseModel noise = make_noise(0.05, 0.03);
  const MeasurementRecord a = sample_noisy(genome, 2048, noise, 99);
  const MeasurementRecord b = sample_noisy(genome, 2048, noise, 99);
  const MeasurementRecord c = sample_noisy(genome, 2048, noise, 100);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  EXPECT_EQ(a.total_shots, 2048u);
  std::uint64_t total = 0;
  for (const auto& [outcome, count] : a.counts) {
    EXPECT_LT(outcome, 4u);
    total += count;
  }
  EXPECT_EQ(total, 2048u);
}

TEST(Noise, ReadoutFlipRateMatchesBinomialBand) {
  // Empty circuit on one qubit always measures 0; with q = 0.1 the observed
  // ones count is Binomial(shots, 0.1). Check the 3 sigma band at 1e5 shots.
  CircuitGenome genome;
  genome.num_qubits = 1;
  const std::uint64_t shots = 100000;
  const double q = 0.1;
  const MeasurementRecord record = sample_noisy(genome, shots, make_noise(0.0, q), 7);
  const double ones = record.counts.count(1) ? static_cast<double>(record.counts.at(1)) : 0.0;
  const double mean = q * static_cast<double>(shots);
  const double sigma = std::sqrt(static_cast<double>(shots) * q * (1.0 - q));
  EXPECT_NEAR(ones, mean, 3.0 * sigma);
}

TEST(Noise, CertainReadoutFlipInvertsEveryBit) {
  CircuitGenome genome;
  genome.num_qubits = 2;
  const MeasurementRecord record = sample_noisy(genome, 256, make_noise(0.0, 1.0), 3);
  ASSERT_EQ(record.counts.size(), 1u);
  EXPECT_EQ(record.counts.at(3), 256u);  // "11"
}

TEST(Noise, DepolarizingMixtureMatchesAnalyticDistribution) {
  // |00> through a single RZZ stays |00> up to phase. A uniformly random
  // non-identity two-qubit Pauli applied after the gate sends |00> to:
  //   |00> for {IZ, ZI, ZZ}        (3 of 15)
  //   |10> for {XI, XZ, YI, YZ}    (4 of 15)
  //   |01> for {IX, IY, ZX, ZY}    (4 of 15)
  //   |11> for {XX, XY, YX, YY}    (4 of 15)
  // so P(00) = (1-p) + 3p/15 and each flipped outcome has mass 4p/15.
  CircuitGenome genome;
  genome.num_qubits = 2;
  genome.gates = {{GateKind::RZZ, 0, 1, 1.0}};
  const double p = 0.3;
  const std::uint64_t shots = 100000;
  const MeasurementRecord record = sample_noisy(genome, shots, make_noise(p, 0.0), 11);

  const double n = static_cast<double>(shots);
  std::vector<double> expected = {(1.0 - p + 3.0 * p / 15.0) * n, 4.0 * p / 15.0 * n,
                                  4.0 * p / 15.0 * n, 4.0 * p / 15.0 * n};
  std::vector<std::uint64_t> observed(4, 0);
  for (const auto& [outcome, count] : record.counts) {
    observed[outcome] = count;
  }
  EXPECT_GT(testutil::chi_square_p_value(expected, observed), 0.001);
}

TEST(Noise, CertainErrorsStillSumToShots) {
  const CircuitGenome genome = entangling_pair();
  const MeasurementRecord record = sample_noisy(genome, 512, make_noise(1.0, 0.5), 13);
  EXPECT_EQ(record.total_shots, 512u);
  std::uint64_t total = 0;
  for (const auto& [outcome, count] : record.counts) {
    total += count;
  }
  EXPECT_EQ(total, 512u);
}

TEST(Noise, SingleQubitGatesAreNoiselessUnderDepolarizing) {
  // The error channel only follows two-qubit gates, so a single-qubit-only
  // circuit with q = 0 samples the ideal distribution even at p = 1.
  CircuitGenome genome;
  genome.num_qubits = 2;
  genome.gates = {{GateKind::RX, 0, -1, 0.9}, {GateKind::RY, 1, -1, 2.2}};
  const MeasurementRecord ideal = sample(run_circuit(genome), 4096, 21);
  const MeasurementRecord noisy = sample_noisy(genome, 4096, make_noise(1.0, 0.0), 21);
  EXPECT_EQ(ideal, noisy);
}

TEST(Noise, RejectsZeroShots) {
  EXPECT_THROW(sample_noisy(entangling_pair(), 0, make_noise(0.1, 0.1), 1),
               std::invalid_argument);
}

}  // namespace
