// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <stdexcept>

namespace nanorelay {

/// Core dB/linear conversions. All other unit handling in the library goes
/// through these two functions.
double db_to_linear(double db);
double linear_to_db(double ratio);

class PowerDbm {
 public:
  explicit PowerDbm(double dbm);
  double dbm() const { return dbm_; }
  double watts() const;

 private:
  double dbm_;
};

class FrequencyThz {
 public:
  explicit FrequencyThz(double thz);
  double thz() const { return thz_; }

 private:
  double thz_;
};

class BandwidthHz {
 public:
  explicit BandwidthHz(double hz);
  double hz() const { return hz_; }

 private:
  double hz_;
};

class DistanceMm {
 public:
  explicit DistanceMm(double mm);
  double mm() const { return mm_; }

 private:
  double mm_;
};

class SnrLinear;

class SnrDb {
 public:
  explicit SnrDb(double db);
  double db() const { return db_; }
  SnrLinear linear() const;

 private:
  double db_;
};

class SnrLinear {
 public:
  explicit SnrLinear(double ratio);
  double ratio() const { return ratio_; }
  SnrDb db() const;

 private:
  double ratio_;
};

class NoisePsdDbmPerHz {
 public:
  explicit NoisePsdDbmPerHz(double dbm_per_hz);
  double dbm_per_hz() const { return dbm_per_hz_; }

 private:
  double dbm_per_hz_;
};

double dbm_to_watt(PowerDbm p);

/// Total noise power over a bandwidth: psd + 10*log10(bw).
PowerDbm noise_power_dbm(NoisePsdDbmPerHz psd, BandwidthHz bw);

/// All scalar radio/tissue parameters. Default-constructed values are the
/// simulation baseline: N = 5 sweat ducts, f = 1 THz, BW = 1 GHz,
/// P_s = P_r = -40 dBm (100 nW), gamma_th = 10 dB, noise PSD = -174 dBm/Hz,
/// Tx-Rx distance d = 0.2 mm.
struct SystemConfig {
  double n_ducts = 5.0;
  FrequencyThz f{1.0};
  BandwidthHz bw{1e9};
  PowerDbm p_source{-40.0};
  PowerDbm p_relay{-40.0};
  SnrDb gamma_th{10.0};
  NoisePsdDbmPerHz noise_psd{-174.0};
  DistanceMm d{0.2};

  /// Throws std::invalid_argument on out-of-domain fields.
  void validate() const;
};

}  // namespace nanorelay
