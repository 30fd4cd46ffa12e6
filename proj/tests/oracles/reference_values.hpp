#pragma once

// Generated by generate_reference_values.py (mpmath, 40 digits). Do not edit.

#include <vector>

namespace psilab::oracle {

struct GammaRef { double re, im, value_re, value_im; };
struct ZetaRef { double re, im, value_re, value_im; };
struct PsiRef { double re, im, x, value_re, value_im; };

inline const std::vector<GammaRef> kGammaRefs = {
    {0.1, 0.0, 9.5135076986687312858, 0.0},
    {0.5, 0.0, 1.7724538509055160273, 0.0},
    {2.5, 0.0, 1.3293403881791370205, 0.0},
    {7.25, 0.0, 1155.3810139199896872, 0.0},
    {49.5, 0.0, 8.6676018431352723453e+61, 0.0},
    {0.3, 20.0, -1.0181965450275251817e-14, 2.956587583350412073e-14},
    {2.0, -45.0, -1.4927556193066708802e-28, -2.6141231288060310911e-29},
    {-3.5, 0.2, 0.21680226122543673982, 0.061839525441077676909},
    {-0.7, 0.0, -4.2736699824108433611, 0.0},
    {10.0, 30.0, -8.5429315061699318786e-7, -6.586002584109200444e-7},
    {0.05, 0.2, 0.6763240516321527856, -4.5310748373565829492},
    {25.0, -25.0, -1113537438646798480.9, -8889271476009894383.1},
};

inline const std::vector<ZetaRef> kZetaRefs = {
    {0.1, 0.0, -0.60303751985624172166, 0.0},
    {0.5, 0.0, -1.4603545088095868129, 0.0},
    {0.75, 0.0, -3.4412853869452228944, 0.0},
    {1.5, 0.0, 2.6123753486854883433, 0.0},
    {3.0, 0.0, 1.2020569031595942854, 0.0},
    {10.0, 0.0, 1.0009945751278180853, 0.0},
    {0.5, 21.0, -0.0051620646381019009048, -0.024546964575121902878},
    {0.3, -37.0, -0.13464584248343119505, 1.4568112854673720399},
    {2.0, 45.0, 1.3734849647450401093, 0.22143001473134322764},
    {1.0, 9.064720283654388, 1.3465795428363171037, 0.10988313679626950079},
    {1.02, 18.1294405673, 1.8101739213244742872, -0.21192947938763571591},
    {7.5, -50.0, 0.99452193659773608773, -0.00081213891577420424163},
    {1.5, 30.0, 0.69085573152281282784, -0.36714274737472117117},
};

inline const std::vector<PsiRef> kPsiRefs = {
    {2.0, 0.0, 0.0, 1.6449340668482264365, 0.0},
    {0.75, 0.0, 0.5, -4.028036535056665957, 0.0},
    {3.0, 0.0, 2.0, 0.0770569031595942854, 0.0},
    {0.6, 0.0, -0.7, -0.2583869218044256587, 0.0},
    {0.5, 3.0, 0.0, 0.53273667097423288392, -0.078896513425833382656},
    {1.1, 20.0, 3.0, -0.090899396469972423057, -0.16069952928081586799},
    {5.0, -20.0, 10.0, -1.0115857245866229495e-6, -4.5472298737745064922e-6},
    {0.3, 14.13, 5.0, 0.25936080075115163338, -0.17200015447570060919},
    {0.5, 50.0, 0.0, -0.081712108320979975048, 0.33079219403866129559},
    {1.04, 0.0, 0.5, 24.96220302000731685, 0.0},
    {0.2, -7.0, 9.5, 0.45606744636017983672, -0.79224963376769244228},
    {4.0, 0.0, 100.0, 3.2836666500022217224e-7, 0.0},
};

}  // namespace psilab::oracle
