// Generated by gen_oracles.py (numpy/scipy/mpmath). Do not edit.
#pragma once

#include <vector>

namespace oracle {

inline const std::vector<double> kSeriesX = {-0.211189120557, 0.149595836962, 0.284452253569, -0.726050324449, -1.951473848406, -0.73128486538, 0.442441737766, -0.933167952772, -0.787689294087, 0.857270366125, 0.034799252655, 0.195770212844, 0.239628884899, 0.856018103485, 1.36882528961, 0.755945082447, 1.696555820107, 0.874258295181, -0.868646738975, -1.510559361106, -0.505541874919, -1.90367892809, -0.145913566906, -0.662308157222, -0.513374427086, -0.809135182008, -0.48959500628, -0.971548511569, -1.195301793, -0.54846957361, -1.52102361333, -0.003970465709, 0.875565936547, 0.332831248093, 0.939726207968, 2.185262079056, -0.60594239525, -0.488577151593, -1.20139887712, -1.263873646368, -0.213225060822, 0.153073453364, -0.771942946165, 1.93120684744, 1.155167316255, -1.120080238351, 0.524039096386, 1.079217769212, 1.698437695912, 0.946030456426, 0.202990551906, -1.450914320784, -1.26721653718, 0.147165058917, 0.162713517251, -0.456354677083, 1.400114956529, 0.19252723035, -1.063533389078, -1.249910999449};
inline const std::vector<double> kSeriesY = {-0.54951095478, -1.723814416299, -0.258305584638, -0.048663647003, -0.545507065069, 0.255160857654, -0.820627709948, -1.626969972435, 0.155423051959, 0.395631103045, -0.842961269244, -0.760055213738, -0.150574332853, 0.369583241417, -0.126201782853, 0.371800570129, -1.583101250727, -0.828117988585, -0.191721452591, -1.472557460832, -0.417076710097, -1.236716088433, -0.158444819656, -0.136467810235, 1.04711440276, -0.103917376835, 0.739377784149, 0.664581960766, -1.578438309766, -0.019428398934, -1.519332563924, -0.024510964905, 1.171016870109, 0.814324819505, 0.086283543599, 1.718853473625, -0.124664323182, -0.014567501998, -0.52590401947, -0.785659381015, -0.4714698302, -0.222726276637, -0.380610470469, 0.946311352731, 1.57306846935, -0.781923427464, -0.127282361269, 1.390120089428, 1.592650809549, 1.844094279989, -0.137741232391, -0.988858575761, -0.355157214468, 0.604366407072, 0.87316962978, -0.335043108069, 0.365105345909, 0.739176230222, -1.270658084518, -0.291475285984};
inline constexpr double kKendallTn = 1.4201101019514921;
inline constexpr double kKendallD = 0.2316901374123814;
inline constexpr double kKendallStat = 1.5323376707052725;
inline constexpr double kKendallP = 0.018261302879892808;
inline constexpr double kPearsonTn = 1.9046946251684955;
inline constexpr double kPearsonD = 1.122509279457084;
inline constexpr double kPearsonStat = 1.6968186009916333;
inline constexpr double kPearsonP = 0.006312398395811419;
inline constexpr double kCopulaTn = 4.8729087520929735;
inline constexpr double kCopulaD = 4.437814787067669;
inline constexpr double kCopulaStat = 1.098042389306832;
inline constexpr double kCopulaP = 0.17925090513588424;
inline constexpr double kSeriesPearson = 0.5508745804558527;
inline constexpr double kSeriesSpearman = 0.5363712142261741;

inline const std::vector<double> kTiesX = {3.0, 1.0, 4.0, 1.0, 5.0, 9.0, 2.0, 6.0, 5.0, 3.0, 5.0, 8.0, 9.0, 7.0, 9.0};
inline const std::vector<double> kTiesY = {2.0, 7.0, 1.0, 8.0, 2.0, 8.0, 1.0, 8.0, 2.0, 8.0, 4.0, 5.0, 9.0, 0.0, 4.0};
inline constexpr double kTiesTauA = 0.14285714285714285;

inline const std::vector<double> kHacValues = {-0.189379509418, -0.315152695058, -1.412544099812, -1.063788088839, 0.926532402817, -0.189466255915, -0.400886529536, 0.791897844423, -0.905870232712, 1.613377496704, -0.368214537989, -0.513043141315, -0.265165132262, 0.037341603229, 0.701168535852, -0.698835702399, -0.824027303575, 0.038157318144, 0.338946480596, 0.877255457333, -0.476753173358, 0.967011711446, -1.019892924993, 1.38577819049, -1.092071884349, -0.086264217022, 0.195294332904, 1.013168409695, 1.460167546576, 0.049231054948, 1.895644468605, -0.819525405542, 0.327085780475, -0.236900620221, 0.57242670333, -0.951857656959, -1.097837125687, 1.283160668735, 1.064030352896, 0.561118229351};
inline constexpr double kHacQuarticB3 = 0.6035592761572298;
inline constexpr double kHacBartlettB5 = 0.5781599711174672;

inline constexpr double kKolmogorovCdf_0_2 = 5.050407338670114e-13;
inline constexpr double kKolmogorovCdf_0_5 = 0.036054756335124914;
inline constexpr double kKolmogorovCdf_1_0 = 0.7300003283226455;
inline constexpr double kKolmogorovCdf_1_3581 = 0.9500003695683326;
inline constexpr double kKolmogorovCdf_2_0 = 0.9993290747442203;
inline constexpr double kKolmogorovCdf_3_0 = 0.9999999695400406;
inline constexpr double kKolmogorovSf_3_0 = 3.045995948942526e-08;
inline constexpr double kKolmogorovQ_0_5 = 0.8275735551899059;
inline constexpr double kKolmogorovQ_0_9 = 1.2238478702170825;
inline constexpr double kKolmogorovQ_0_95 = 1.3580986393225505;
inline constexpr double kKolmogorovQ_0_99 = 1.6276236115189502;

inline constexpr double kModel2Dsq = 0.4839614077049009;
inline constexpr double kGreinerDiff_04_08 = 0.3283547097328239;

}  // namespace oracle
