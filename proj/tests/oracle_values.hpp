// Generated by tests/oracle/generate_oracles.py; do not edit.
#pragma once

#include <map>
#include <string>

namespace oracle {

inline const std::map<std::string, double> intro = {
    {"d2", 3.0},
    {"delta_a", 2.1213203435596426},
    {"delta_e", 1.5811388300841897},
    {"departure", 2.0},
    {"e_fro", 2.6457513110645906},
    {"eq_1_4", 3.7416573867739414},
    {"eq_1_5", 3.7416573867739414},
    {"eq_1_6", 3.7416573867739414},
    {"eq_1_7", 3.8729833462074169},
    {"eq_1_8", 3.8056950447385932},
    {"eq_1_9", 3.6855128875447393},
    {"eq_3_11a", 3.0822070014844882},
    {"eq_3_11b", 3.3870541706621079},
    {"eq_3_11c", 3.0536134857471334},
    {"eq_3_3a", 3.0822070014844882},
    {"eq_3_3b", 3.3870541706621079},
    {"eq_3_3c", 4.1622776601683793},
    {"eq_3_3d", 3.0536134857471334},
    {"eq_3_4a", 3.0413812651491098},
    {"eq_3_4b", 3.0},
    {"eq_3_5a", 3.0822070014844882},
    {"eq_3_5b", 3.3870541706621079},
    {"eq_3_5c", 4.1622776601683793},
    {"eq_3_5d", 3.0536134857471334},
    {"eq_3_5e", 3.0413812651491098},
    {"eq_3_5f", 3.0},
    {"eq_4_6a", 3.0822070014844882},
    {"eq_4_6b", 3.3870541706621079},
    {"eq_4_6c", 3.0536134857471334},
    {"eq_4_6d", 3.0413812651491098},
    {"eq_4_6e", 3.0},
    {"henrici_3_6", 2.0},
    {"sun_3_7", 2.0},
    {"thm_4_3_a", 2.0},
    {"thm_4_3_b", 2.0},
};

inline const std::map<std::string, double> circulant = {
    {"d2", 0.68006384966719214},
    {"delta_a", 3.8729833462074169},
    {"delta_e", 1.9338002309787155},
    {"departure", 1.1110182352451921},
    {"e_fro", 1.940521837032503},
    {"eq_1_4", 3.3610824149371881},
    {"eq_1_5", 3.3610824149371881},
    {"eq_1_7", 3.4581159348578951},
    {"eq_3_11a", 3.3533254638741326},
    {"eq_3_11b", 2.736222614764988},
    {"eq_3_11c", 2.9339569345579313},
    {"eq_3_3a", 3.3533254638741326},
    {"eq_3_3b", 2.736222614764988},
    {"eq_3_3c", 3.0490918580660661},
    {"eq_3_3d", 2.9339569345579313},
    {"eq_3_4a", 3.7102055199139575},
    {"eq_3_4b", 3.0915950206428712},
    {"eq_3_5a", 3.3533254638741326},
    {"eq_3_5b", 2.736222614764988},
    {"eq_3_5c", 3.0490918580660661},
    {"eq_3_5d", 2.9339569345579313},
    {"eq_3_5e", 3.7102055199139575},
    {"eq_3_5f", 3.0915950206428712},
    {"henrici_3_6", 2.9947780480907176},
    {"sun_3_7", 0.67162745815352432},
};

inline const std::map<std::string, double> hermitian3 = {
    {"d2", 0.90334853189914981},
    {"delta_a", 3.0},
    {"delta_e", 1.5343293866268307},
    {"departure", 1.4757293097889422},
    {"e_fro", 1.5612494995995996},
    {"eq_1_4", 2.704163456597992},
    {"eq_1_5", 2.704163456597992},
    {"eq_1_6", 2.2079402165819617},
    {"eq_1_7", 3.0782543088639779},
    {"eq_1_8", 2.3865921502996162},
    {"eq_1_9", 2.2062833673702816},
    {"eq_3_11a", 2.6731691553909067},
    {"eq_3_11b", 2.5217661342391922},
    {"eq_3_11c", 2.5814729961823301},
    {"eq_3_3a", 2.6731691553909067},
    {"eq_3_3b", 2.5217661342391922},
    {"eq_3_3c", 3.0238694894458583},
    {"eq_3_3d", 2.5814729961823301},
    {"eq_3_4a", 2.9047375096555626},
    {"eq_3_4b", 2.7366568325485894},
    {"eq_3_5a", 2.6731691553909067},
    {"eq_3_5b", 2.5217661342391922},
    {"eq_3_5c", 3.0238694894458583},
    {"eq_3_5d", 2.5814729961823301},
    {"eq_3_5e", 2.9047375096555627},
    {"eq_3_5f", 2.7366568325485894},
    {"eq_4_6a", 2.1889875894272829},
    {"eq_4_6b", 2.3747926041855449},
    {"eq_4_6c", 2.1882030750506819},
    {"eq_4_6d", 2.6339134382131847},
    {"eq_4_6e", 2.5535685260268381},
    {"henrici_3_6", 3.718930825643807},
    {"sun_3_7", 1.3551845228335479},
    {"thm_4_3_a", 1.6770509831248423},
    {"thm_4_3_b", 1.6770509831248423},
};

inline const std::map<std::string, double> example_4_4_n3 = {
    {"d2", 1.7320508075688773},
    {"delta_a", 1.6329931618554521},
    {"delta_e", 1.2909944487358056},
    {"departure", 1.0},
    {"e_fro", 1.414213562373095},
    {"eq_1_4", 2.4494897427831781},
    {"eq_1_5", 2.0},
    {"eq_1_6", 2.0},
    {"eq_1_7", 1.9566366869570319},
    {"eq_1_8", 2.0},
    {"eq_1_9", 1.9566366869570319},
    {"eq_3_11a", 1.9148542155126762},
    {"eq_3_11b", 1.9559503721594149},
    {"eq_3_11c", 1.8926143023531264},
    {"eq_3_3a", 1.9148542155126762},
    {"eq_3_3b", 1.9559503721594149},
    {"eq_3_3c", 2.3626233084162213},
    {"eq_3_3d", 1.8926143023531264},
    {"eq_3_4a", 1.8257418583505537},
    {"eq_3_4b", 1.8191759334265895},
    {"eq_3_5a", 2.3094010767585031},
    {"eq_3_5b", 2.0581710272714923},
    {"eq_3_5c", 2.3626233084162213},
    {"eq_3_5d", 2.1567298664183949},
    {"eq_3_5e", 1.9436506316151002},
    {"eq_3_5f", 1.9148542155126762},
    {"eq_4_6a", 1.9148542155126762},
    {"eq_4_6b", 1.9559503721594149},
    {"eq_4_6c", 1.8926143023531264},
    {"eq_4_6d", 1.8257418583505537},
    {"eq_4_6e", 1.8191759334265895},
    {"henrici_3_6", 1.414213562373095},
    {"sun_3_7", 1.0},
    {"thm_4_3_a", 1.0},
    {"thm_4_3_b", 1.0},
};

inline const std::map<std::string, double> example_4_4_n5 = {
    {"d2", 2.2360679774997897},
    {"delta_a", 1.7888543819998318},
    {"delta_e", 1.4832396974191326},
    {"departure", 1.0},
    {"e_fro", 2.0},
    {"eq_1_4", 4.4721359549995794},
    {"eq_1_5", 2.8284271247461901},
    {"eq_1_6", 2.8284271247461901},
    {"eq_1_7", 2.6457513110645906},
    {"eq_1_8", 2.6131259297527531},
    {"eq_1_9", 2.6457513110645906},
    {"eq_3_11a", 2.4899799195977465},
    {"eq_3_11b", 2.4693354766698475},
    {"eq_3_11c", 2.4426377944423658},
    {"eq_3_3a", 2.4899799195977465},
    {"eq_3_3b", 2.4693354766698475},
    {"eq_3_3c", 2.8224952426599881},
    {"eq_3_3d", 2.4426377944423658},
    {"eq_3_4a", 2.3664319132398464},
    {"eq_3_4b", 2.3515573835513144},
    {"eq_3_5a", 3.5777087639996635},
    {"eq_3_5b", 2.7049260230836998},
    {"eq_3_5c", 2.8224952426599881},
    {"eq_3_5d", 2.9888055791028848},
    {"eq_3_5e", 2.5612496949731395},
    {"eq_3_5f", 2.4899799195977465},
    {"eq_4_6a", 2.4899799195977465},
    {"eq_4_6b", 2.4693354766698475},
    {"eq_4_6c", 2.4426377944423658},
    {"eq_4_6d", 2.3664319132398464},
    {"eq_4_6e", 2.3515573835513144},
    {"henrici_3_6", 2.1147425268811282},
    {"sun_3_7", 1.0},
    {"thm_4_3_a", 1.0},
    {"thm_4_3_b", 1.0},
};

inline const std::map<std::string, double> example_4_4_n10 = {
    {"d2", 3.1622776601683793},
    {"delta_a", 1.8973665961010276},
    {"delta_e", 1.6124515496597099},
    {"departure", 1.0},
    {"e_fro", 3.0},
    {"eq_1_4", 9.486832980505138},
    {"eq_1_5", 4.2426406871192851},
    {"eq_1_6", 4.2426406871192851},
    {"eq_1_7", 3.7416573867739414},
    {"eq_1_8", 3.6390439248680807},
    {"eq_1_9", 3.7416573867739414},
    {"eq_3_11a", 3.4058772731852802},
    {"eq_3_11b", 3.358623356406353},
    {"eq_3_11c", 3.3503586523414803},
    {"eq_3_3a", 3.4058772731852802},
    {"eq_3_3b", 3.358623356406353},
    {"eq_3_3c", 3.6366059862623858},
    {"eq_3_3d", 3.3503586523414803},
    {"eq_3_4a", 3.2863353450309967},
    {"eq_3_4b", 3.2685289616278066},
    {"eq_3_5a", 5.6920997883030828},
    {"eq_3_5b", 3.7548661112738474},
    {"eq_3_5c", 3.6366059862623858},
    {"eq_3_5d", 4.2041300286692204},
    {"eq_3_5e", 3.4985711369071803},
    {"eq_3_5f", 3.4058772731852802},
    {"eq_4_6a", 3.4058772731852802},
    {"eq_4_6b", 3.358623356406353},
    {"eq_4_6c", 3.3503586523414803},
    {"eq_4_6d", 3.2863353450309967},
    {"eq_4_6e", 3.2685289616278066},
    {"henrici_3_6", 3.5840246342157205},
    {"sun_3_7", 1.0},
    {"thm_4_3_a", 1.0},
    {"thm_4_3_b", 1.0},
};

inline const std::map<std::string, double> phi = {
    {"phi1_m", 1.5278640450004206},
    {"phi1_rotated", 1.0},
    {"phi2_m", 0.0},
    {"phi2_rotated", 1.0},
    {"phi3_m", 0.1715728752538099},
    {"phi3_rotated", 1.0},
};

}  // namespace oracle
