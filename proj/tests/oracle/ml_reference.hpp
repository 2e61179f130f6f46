// Generated by gen_ml_reference.py -- do not edit by hand.
// Reference values carry ~35 verified digits, rounded to the
// nearest double; negative-axis entries were confirmed by two
// independent methods (series and contour quadrature).
#pragma once

namespace mlref {

struct MlPoint { double alpha; double z; double value; };
struct BesselPoint { int nu; double alpha; double z; double value; };

inline constexpr MlPoint kMlValues[] = {
    {0.25, -1.0, 0.4638527608017133},
    {0.3, -0.5, 0.6326490059435991},
    {0.3, -2.0, 0.29023222616787536},
    {0.4, -1.2, 0.394526650452922},
    {0.5, -1.0, 0.427583576155807},
    {0.5, -2.0, 0.25539567631050575},
    {0.5, -4.0, 0.13699945762506138},
    {0.6, -1.5, 0.3032148361988204},
    {0.7, -2.0, 0.21378672701529727},
    {0.8, -10.0, 0.024902819761976534},
    {0.85, -4.0, 0.064301555916008},
    {0.9, -3.0, 0.08388835403377326},
    {0.9, -8.0, 0.017095144580796806},
    {1.0, -5.0, 0.006737946999085467},
    {1.0, -30.0, 9.357622968840175e-14},
    {0.25, -2.4, 0.2605361353529081},
    {0.35, -3.5, 0.17929182515580447},
    {0.5, -5.0, 0.11070463773306863},
    {0.5, -6.0, 0.09277656780053835},
    {0.5, -6.32, 0.08819256020456756},
    {0.6, -8.5, 0.055063292609250296},
    {0.7, -12.0, 0.029761168325449356},
    {0.8, -18.0, 0.013004905475961575},
    {0.95, -30.0, 0.0018277746789235518},
    {0.5, -6.34, 0.08792088607739644},
    {0.5, -7.0, 0.07980005432915294},
    {0.5, -10.0, 0.05614099274382259},
    {0.5, -30.0, 0.01879588886141675},
    {0.5, -50.0, 0.011281536265323773},
    {0.25, -3.0, 0.2190044275604068},
    {0.25, -10.0, 0.07623703523972164},
    {0.3, -8.0, 0.08949309581862072},
    {0.4, -25.0, 0.026501375668866674},
    {0.7, -20.0, 0.01739569829160398},
    {0.8, -50.0, 0.0044677761579029925},
    {0.9, -200.0, 0.0005299754388832091},
    {0.95, -100.0, 0.000523330643947041},
    {0.2, -50.0, 0.01691371014778602},
    {0.99, -500.0, 2.019388501695445e-05},
    {0.25, 0.5, 2.079614221009051},
    {0.3, 1.0, 8.04067559696706},
    {0.5, 1.0, 5.008980080762283},
    {0.5, 2.0, 108.94090438997797},
    {0.6, 2.5, 166.4957169105694},
    {0.8, 3.0, 64.7517879857025},
    {1.0, 2.0, 7.38905609893065},
    {0.95, 10.0, 84092.45767702124},
    {0.5, 6.0, 8622463094230390.0},
    {0.5, 10.0, 5.376234283632271e+43},
    {0.5, 25.0, 5.4335189393274735e+271},
    {0.4, 8.0, 1.0319026890947923e+79},
    {0.7, 40.0, 3.7509622119767357e+84},
    {0.3, 4.0, 4.4100941505093525e+44},
    {0.2, 3.0, 1.7081621988666157e+106},
    {0.9, 100.0, 3.0934517544703477e+72},
    {0.6, 30.0, 1.0324341723271485e+126},
    {0.95, 500.0, 1.5412727994137043e+301},
};

inline constexpr MlPoint kMlLogValues[] = {
    {0.5, 27.0, 729.6931471805599},
    {0.25, 100.0, 100000001.38629436},
    {0.8, 1000.0, 5623.636395454802},
    {0.2, 50.0, 312500001.6094376},
};

inline constexpr BesselPoint kBesselValues[] = {
    {0, 1.0, 0.5, 1.0634833707413236},
    {0, 1.0, 1.0, 1.2660658777520084},
    {0, 1.0, 2.0, 2.2795853023360673},
    {1, 1.0, 2.0, 1.590636854637329},
    {2, 1.0, 1.5, 0.33783461833568074},
    {0, 0.5, 1.0, 1.7533876543770903},
    {0, 0.5, 1.772453850905516, 8.268026510153437},
    {0, 0.75, 1.8381250536977665, 3.272802768017357},
    {1, 0.5, 2.0, 15.119758973064904},
    {2, 0.75, 1.5, 0.6937865073672483},
    {3, 0.6, 1.0, 0.10639661352077287},
};

} // namespace mlref
