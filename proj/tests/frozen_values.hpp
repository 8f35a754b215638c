// Generated by tests/oracles/freeze_values.py (mpmath, 40 digits). Do not edit.
#pragma once

namespace frozen {
inline constexpr double erf_1 = 0.8427007929497148693;
inline constexpr double airy_ai_1 = 0.1352924163128814155;
inline constexpr double airy_ai_prime_1 = -0.1591474412967932128;
inline constexpr double bessel_k_1_3_at_2 = 0.1165449612961652488;
inline constexpr double erfc_minus_half = 1.520499877813046538;
inline constexpr double pfq_0f2_half_3q_at_m1_256 = 0.9895910823615773182;
inline constexpr double pfq_1f2_sample = 1.527020706495249708;
inline constexpr double wright_m1_2_1_2_at_0_5 = 0.5300070646880571217;
inline constexpr double wright_m1_2_1_at_1 = 1.520499877813046538;
inline constexpr double wright_1_3_1_2_at_2 = 7.036229449449413981;
inline constexpr double wright_1_2_m1_2_at_1_5 = 1.230223510340957536;
inline constexpr double wright_m2_3_2_3_at_1 = 0.6627728767044174423;
inline constexpr double wright_m2_3_1_3_at_1 = 0.1679740605579085165;
inline constexpr double wright_m3_4_3_2_at_m2 = 0.01886409724450287186;
inline constexpr double wright_m1_4_3_4_at_m1 = 0.3833354165706835358;
inline constexpr double wright_m1_3_2_3_at_m1 = 0.3962394797065025906;
inline constexpr double wright_1_m3_at_2 = 0.9822872923866491421;
inline constexpr double ref_k13_at_1 = 0.6627728767044174423;
inline constexpr double ref_airy_at_1 = 0.3962394797065025906;
}  // namespace frozen
