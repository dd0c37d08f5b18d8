// Generated by tools/oracles.py; do not edit.
#pragma once

namespace oracle {
inline constexpr double kEntropy011 = 0.49991595816452800;
inline constexpr double kInverseEntropyHalf = 0.11002786443835955;
inline constexpr double kLog2Binom1000_500 = 994.69099911923269;
inline constexpr double kRatioR_01_02 = 0.50000000000000000;
inline constexpr double kExponentI_01_005 = -1.0172202174468715;
inline constexpr double kExponentI_02_01 = -1.0954618442383218;
inline constexpr double kTau_01_005 = 0.45177537614240970;
inline constexpr double kTau_03_04 = 0.45517015238801199;
inline constexpr double kLittleH_4_01 = 0.69282032302755092;
inline constexpr double kPsi_4_025 = 0.68872187554086714;
inline constexpr double kPsi_3_01 = 0.14409128944065202;
inline constexpr double kPsi_6_04 = 1.9129436906783162;
inline constexpr double kPi_01_005 = -0.13952394209425285;
inline constexpr double kXStar_025_01 = 0.042564060474416590;
inline constexpr double kAlphaMax_025_01 = -0.021469225948054282;
inline constexpr double kPhi_03_02 = -0.14879142822140616;
inline constexpr double kUeExponent_05_01 = -0.059902799576668127;
inline constexpr double kTildePhiSlopeAtZero_1e6 = 1.8466204170295755;
inline constexpr double kTildePhiSlopeAtZero_1e3 = 1.7394792008946947;
inline constexpr double kEta_01_02 = -0.0036109128822124369;
inline constexpr double kKrawLog2Ratio_64_16_4 = 38.909828290256494;
inline constexpr double kKrawLog2Ratio_30_7_3 = 6.7728361468928289;
inline constexpr double kI0_64_16_4 = 2.2206445087328128;
inline constexpr double kRho_64_16_4 = 2.1547005383792515;
inline constexpr double kPhiBig_64_16_4 = 5.0980762113533159;
inline constexpr double kCapF_2_1_3 = 2.1201368195014550;
}  // namespace oracle
