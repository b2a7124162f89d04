#pragma once

// Reference values at 20 significant digits from tests/oracles/freeze_values.py (mpmath, 30 digits).

namespace frozen {

inline constexpr double gamma_product_half_re = 0.68256945033085777154;
inline constexpr double zeta_3 = 1.2020569031595942854;
inline constexpr double zeta_0p75 = -3.4412853869452228944;
inline constexpr double eta_0p75 = 0.65111567996492825401;
inline constexpr double k0_1 = 0.42102443824070833334;
inline constexpr double k_2i_1 = 0.08061699762236597857;
inline constexpr double k0_cos1 = 0.8609292697890465252;
inline constexpr double k_7p5_3 = 31.944819211158766623;
inline constexpr double k_17_8 = 230.9617014499240518;
inline constexpr double k_3i_0p05 = -0.0056105859735868152868;
inline constexpr double j1_zero = 3.8317059702075123156;
inline constexpr double j1_10 = 0.04347274616886143667;
inline constexpr double j1_45 = 0.028348854376424527534;
inline constexpr double legendre_integral_tau1_z3 = -0.17264711560746553962;
inline constexpr double legendre_closed_tau1_z3 = 0.30177788272132879394;
inline constexpr double legendre_integral_tau0p5_z2 = -0.032563188549466553318;
inline constexpr double legendre_closed_tau0p5_z2 = 0.57369797377899842555;
inline constexpr double legendre_integral_tau2_z5 = -0.59862624023776413619;
inline constexpr double legendre_closed_tau2_z5 = -0.2381411963423490773;
inline constexpr double gamma_zeta_contour_x1 = 0.58197670686932642439;
inline constexpr double mnorm_gamma_c2 = 0.55934282201945197276;
inline constexpr double mnorm_gamma_c3 = 1.3758321661094441008;
inline constexpr double bose_x0p5 = 1.1630890340307782663;
inline constexpr double fermi_x0p5 = 0.33204177669530893472;
inline constexpr double bose_x1 = 0.41552362866773466581;
inline constexpr double fermi_x1 = 0.16969127362750473343;
inline constexpr double bose_x2 = 0.12291617752011496619;
inline constexpr double fermi_x2 = 0.068263049917571381021;
inline constexpr double widder_k2 = 0.4489020440241922688;
inline constexpr double widder_k4 = 0.41158012993599244243;
inline constexpr double widder_k8 = 0.39043265983480786142;
inline constexpr double widder_k16 = 0.3792889799748447712;
inline constexpr double ml_tau0_x1 = 0.58640216303390717182;
inline constexpr double ml_moment_tau1_s2_re = 1.1227817418390963719;
inline constexpr double klt_forward_tau1 = -0.52506924434821663648;
inline constexpr double klt_forward_tau2 = -0.10764205122559078694;
inline constexpr double U_00_x0p5 = 0.37754066879814543536;
inline constexpr double U_00_x1 = 0.26894142136999512075;
inline constexpr double U_00_x2 = 0.11920292202211755594;
inline constexpr double U_01_x0p5 = 0.33204177669530893472;
inline constexpr double U_01_x1 = 0.16969127362750473343;
inline constexpr double U_01_x2 = 0.068263049917571381021;
inline constexpr double U_11_x0p5 = 0.22502289573103598953;
inline constexpr double U_11_x1 = 0.1236576467511298762;
inline constexpr double U_11_x2 = 0.054059418494169493593;
inline constexpr double U_12_x0p5 = 0.19045310867430467941;
inline constexpr double U_12_x1 = 0.091065689006764818331;
inline constexpr double U_12_x2 = 0.03720707958831989857;
inline constexpr double U_22_x0p5 = 0.13269890428974862194;
inline constexpr double U_22_x1 = 0.066474271237166796636;
inline constexpr double U_22_x2 = 0.028594913147973910103;
inline constexpr double moment_11_0p75 = 0.63662530756512741291;
inline constexpr double moment_00_0p75 = 0.79788802946599431541;
inline constexpr double factorization_s2 = 0.6764520210694613697;
inline constexpr double half_V_x1 = 0.0618288233755649381;
inline constexpr double half_V_x2 = 0.027029709247084746796;
inline constexpr double half_V_x4 = 0.0083654204093657953531;

struct ComplexRef { double s_re, s_im, re, im; };
inline constexpr ComplexRef kGammaPoints[] = {
    {0.3, 7.0, 0.000028487579955011350965, 7.7289635745084296675e-7},
    {-2.5, 1.0, -0.041736625807893613745, -0.086369107369763484694},
    {10.0, -40.0, -9.3193703491548884828e-13, -2.1461951052926225427e-12},
    {0.1, 0.0, 9.5135076986687312858, 0.0},
    {3.0, 50.0, 8.2238479643137600836e-31, -3.3482682708008031472e-30},
};
inline constexpr ComplexRef kZetaPoints[] = {
    {0.5, 14.134725141734693, 1.1667488738932820515e-16, -7.3288818837284404118e-16},
    {0.5, 30.0, -0.12064228759004369991, -0.58369121476370628876},
    {2.0, 25.0, 0.85737558708843463793, 0.14438615676884226313},
    {4.0, -30.0, 0.97330453530272409828, 0.066441075987179030303},
    {0.2, 20.0, 0.17343799564384757993, -1.4199885641254358219},
    {-3.5, 2.0, -0.0035609799649190723433, 0.042622537314776407267},
    {1.0, 9.064720283654388, 1.3465795428363171037, 0.10988313679626950079},
};

}  // namespace frozen
