// Expected values for regression tests. Generated data tables; do not edit by hand.
#pragma once
#include <string>
#include <utility>
#include <vector>

namespace frozen {

struct FamilyRecord {
  std::string family;
  std::string record;  // "anchor" or "second"
  std::vector<std::string> base;
  std::vector<std::pair<std::string, std::string>> symbols;
  int order;
  std::vector<std::string> leading_localized;
  std::vector<long long> point_localized;
  std::vector<std::string> leading_global;
  std::vector<long long> point_global;
};

inline const std::vector<FamilyRecord>& family_records() {
  static const std::vector<FamilyRecord> r = {
    {"SMOOTH_I1", "anchor",
     {"0", "1", "1", "1", "1", "1"},
     {{"l1_1", "1"}, {"l6_1", "1"}},
     1,
     {"1", "-1"}, {1, -1},
     {"1", "-1", "-1", "0"}, {1, -1, -1, 0}},
    {"SMOOTH_I1", "second",
     {"0", "1", "1", "1", "1", "1"},
     {{"l1_1", "3/2"}, {"l6_1", "-2"}},
     1,
     {"3/2", "2"}, {3, 4},
     {"3/2", "2", "2", "0"}, {3, 4, 4, 0}},
    {"SMOOTH_I2", "anchor",
     {"0", "0", "1", "1", "0", "-1"},
     {{"l1_1", "1"}, {"l2_1", "1"}, {"l5_1", "1"}},
     1,
     {"1", "1", "1"}, {1, 1, 1},
     {"1", "2", "22", "-12"}, {1, 2, 22, -12}},
    {"SMOOTH_I2", "second",
     {"0", "0", "1", "1", "0", "-1"},
     {{"l1_1", "-1"}, {"l2_1", "2"}, {"l5_1", "1/3"}},
     1,
     {"-1", "2", "1/3"}, {3, -6, -1},
     {"-1", "2/3", "44", "-24"}, {3, -2, -132, 72}},
    {"SMOOTH_I3", "anchor",
     {"0", "1", "1", "0", "0", "-1"},
     {{"l1_1", "1"}, {"l4_1", "1"}, {"l5_1", "1"}},
     1,
     {"1", "1", "1"}, {1, 1, 1},
     {"1", "2", "20", "-16"}, {1, 2, 20, -16}},
    {"SMOOTH_I3", "second",
     {"0", "1", "1", "0", "0", "-1"},
     {{"l1_1", "2"}, {"l4_1", "-3"}, {"l5_1", "5"}},
     1,
     {"2", "-3", "5"}, {2, -3, 5},
     {"2", "10", "-60", "48"}, {1, 5, -30, 24}},
    {"SMOOTH_I4", "anchor",
     {"0", "1", "3", "-10", "0", "1"},
     {{"l1_1", "1"}, {"l2_1", "1"}, {"l4_1", "1"}, {"l5_1", "1"}},
     1,
     {"1", "1", "1", "-2"}, {1, 1, 1, -2},
     {"1", "2", "-20", "80"}, {1, 2, -20, 80}},
    {"SMOOTH_I4", "second",
     {"0", "1", "3", "-10", "0", "1"},
     {{"l1_1", "-2"}, {"l2_1", "3"}, {"l4_1", "1"}, {"l5_1", "7/2"}},
     1,
     {"-2", "7/2", "1", "-6"}, {4, -7, -2, 12},
     {"-2", "7", "-20", "240"}, {2, -7, 20, -240}},
    {"I13_A", "anchor",
     {"0", "1", "1", "0", "0", "1"},
     {{"l1_3", "1"}, {"l5_2", "1"}, {"l4_1", "1"}, {"l3_1", "1"}, {"l6_1", "0"}},
     3,
     {"1", "1", "1", "1"}, {1, 1, 1, 1},
     {"1", "1", "6", "-2"}, {1, 1, 6, -2}},
    {"I13_A", "second",
     {"0", "1", "1", "0", "0", "1"},
     {{"l1_3", "2"}, {"l5_2", "-1"}, {"l4_1", "3"}, {"l3_1", "-1"}, {"l6_1", "1"}},
     3,
     {"2", "2", "-18", "12"}, {1, 1, -9, 6},
     {"2", "2", "42", "-24"}, {1, 1, 21, -12}},
    {"I13_B", "anchor",
     {"0", "1", "1", "0", "0", "1"},
     {{"l1_4", "1"}, {"l5_3", "1"}, {"l4_2", "1"}, {"l3_1", "1"}, {"l6_1", "0"}},
     4,
     {"1", "1", "0", "1"}, {1, 1, 0, 1},
     {"1", "1", "5", "-2"}, {1, 1, 5, -2}},
    {"I13_B", "second",
     {"0", "1", "1", "0", "0", "1"},
     {{"l1_4", "-3"}, {"l5_3", "2"}, {"l4_2", "-1"}, {"l3_1", "2"}, {"l6_1", "-1"}},
     4,
     {"-3", "6", "0", "-9"}, {1, -2, 0, 3},
     {"-3", "6", "-45", "18"}, {1, -2, 15, -6}},
    {"I13_C", "anchor",
     {"0", "1", "1", "0", "0", "1"},
     {{"l1_4", "1"}, {"l5_2", "1"}, {"l4_1", "1"}, {"l6_2", "1"}},
     4,
     {"1", "-1", "-1", "0"}, {1, -1, -1, 0},
     {"1", "-1", "-1", "0"}, {1, -1, -1, 0}},
    {"I13_C", "second",
     {"0", "1", "1", "0", "0", "1"},
     {{"l1_4", "5"}, {"l5_2", "-2"}, {"l4_1", "-1"}, {"l6_2", "3"}},
     4,
     {"5", "6", "-3", "0"}, {5, 6, -3, 0},
     {"5", "6", "-3", "0"}, {5, 6, -3, 0}},
    {"I12", "anchor",
     {"0", "0", "1", "1", "0", "1"},
     {{"l1_2", "1"}, {"l2_1", "1"}, {"l5_1", "1"}, {"l3_1", "1"}, {"l6_1", "0"}},
     2,
     {"1", "1", "1"}, {1, 1, 1},
     {"1", "1", "1", "0"}, {1, 1, 1, 0}},
    {"I12", "second",
     {"0", "0", "1", "1", "0", "1"},
     {{"l1_2", "-4"}, {"l2_1", "3"}, {"l5_1", "2"}, {"l3_1", "-2"}, {"l6_1", "1"}},
     2,
     {"-4", "-6", "-9"}, {4, 6, 9},
     {"-4", "-6", "-9", "0"}, {4, 6, 9, 0}},
    {"I23", "anchor",
     {"0", "0", "1", "0", "0", "-1"},
     {{"l1_2", "1"}, {"l5_2", "1"}, {"l2_1", "1"}, {"l4_1", "1"}},
     2,
     {"1", "1", "1"}, {1, 1, 1},
     {"1", "2", "20", "-12"}, {1, 2, 20, -12}},
    {"I23", "second",
     {"0", "0", "1", "0", "0", "-1"},
     {{"l1_2", "1"}, {"l5_2", "-5"}, {"l2_1", "2"}, {"l4_1", "-3"}},
     2,
     {"1", "-5", "-6"}, {1, -5, -6},
     {"1", "-10", "-120", "72"}, {1, -10, -120, 72}},
    {"I24", "anchor",
     {"0", "0", "1", "-5", "0", "0"},
     {{"l1_2", "1"}, {"l5_2", "1"}, {"l2_1", "1"}, {"l6_1", "1"}, {"l3_1", "1"}, {"l4_1", "1"}},
     2,
     {"1", "1", "1", "1"}, {1, 1, 1, 1},
     {"1", "1", "-5", "-5"}, {1, 1, -5, -5}},
    {"I24", "second",
     {"0", "0", "1", "-5", "0", "0"},
     {{"l1_2", "3"}, {"l5_2", "1"}, {"l2_1", "-2"}, {"l6_1", "2"}, {"l3_1", "-1"}, {"l4_1", "4"}},
     2,
     {"3", "1", "22", "-4"}, {3, 1, 22, -4},
     {"3", "1", "-110", "20"}, {3, 1, -110, 20}},
    {"I123", "anchor",
     {"0", "0", "1", "0", "0", "1"},
     {{"l1_4", "1"}, {"l5_3", "1"}, {"l2_1", "1"}, {"l4_1", "1"}, {"l3_1", "1"}, {"l6_1", "0"}},
     4,
     {"1", "1", "1", "1"}, {1, 1, 1, 1},
     {"1", "1", "6", "-1"}, {1, 1, 6, -1}},
    {"I123", "second",
     {"0", "0", "1", "0", "0", "1"},
     {{"l1_4", "2"}, {"l5_3", "-3"}, {"l2_1", "-1"}, {"l4_1", "2"}, {"l3_1", "3"}, {"l6_1", "-2"}},
     4,
     {"2", "-15", "-20", "-50"}, {2, -15, -20, -50},
     {"2", "-15", "-270", "50"}, {2, -15, -270, 50}},
    {"ORIGIN_39", "anchor",
     {"0", "0", "0", "0", "0", "0"},
     {{"l1_6", "1"}, {"l5_5", "1"}, {"l2_1", "1"}, {"l3_1", "1"}, {"l6_1", "0"}, {"l4_3", "1"}},
     6,
     {"1", "1", "-5", "5"}, {1, 1, -5, 5},
     {"1", "1", "-5", "5"}, {1, 1, -5, 5}},
    {"ORIGIN_39", "second",
     {"0", "0", "0", "0", "0", "0"},
     {{"l1_6", "-2"}, {"l5_5", "3"}, {"l2_1", "2"}, {"l3_1", "-1"}, {"l6_1", "2"}, {"l4_3", "-3"}, {"l3_3", "1"}, {"l6_3", "0"}, {"l3_2", "1"}, {"l6_2", "-1"}},
     6,
     {"-2", "-9", "-180", "-3780"}, {2, 9, 180, 3780},
     {"-2", "-9", "-180", "-3780"}, {2, 9, 180, 3780}},
  };
  return r;
}

struct SweepRecord {
  std::string delta;
  int order;
  std::vector<long long> point;
  std::string base_stratum;  // shorthand key, e.g. "I13"
};

struct WitnessRecord {
  std::string witness;
  int lower_order;
  std::vector<long long> lower_point;
  int generic_order;
  std::vector<SweepRecord> sweep;
};

inline const std::vector<WitnessRecord>& witness_records() {
  static const std::vector<WitnessRecord> r = {
    {"DEF_I13", 4, {1, 1, 0, 1}, 3, {{"1", 3, {1, 1, 1, 1}, "I13"}, {"1/2", 3, {2, 2, 1, 2}, "I13"}, {"1/4", 3, {4, 4, 1, 4}, "I13"}}},
    {"DEF_I12", 2, {1, 1, 1}, 1, {{"1", 1, {1, 1, 1}, "I1"}, {"1/2", 1, {1, 1, 1}, "I1"}, {"1/4", 1, {1, 1, 1}, "I1"}}},
    {"DEF_I24", 2, {1, 1, 1, 1}, 1, {{"1", 1, {1, 1, 1, -2}, "I4"}, {"1/2", 1, {4, 4, 4, -1}, "I4"}, {"1/4", 1, {16, 16, 16, 7}, "I4"}}},
    {"DEF_I24B", 2, {1, 1, 1, -1}, 1, {{"1", 1, {1, 1, 1, -2}, "I4"}, {"1/2", 1, {4, 4, 4, -7}, "I4"}, {"1/4", 1, {16, 16, 16, -23}, "I4"}}},
    {"DEF_I123", 4, {1, 1, 1, 1}, 3, {{"1", 3, {1, 1, 1, 1}, "I13"}, {"1/2", 3, {1, 1, 1, 1}, "I13"}, {"1/4", 3, {1, 1, 1, 1}, "I13"}}},
    {"DEF_ORIGIN", 6, {1, 1, -5, 5}, 4, {{"1", 4, {1, 1, -4, 4}, "I123"}, {"1/2", 4, {4, 4, -19, 19}, "I123"}, {"1/4", 4, {16, 16, -79, 79}, "I123"}}},
  };
  return r;
}

inline const std::vector<long long> kNegativeControlLimit = {4, 1, 1};
inline const std::vector<long long> kNegativeControlExpected = {1, 1, 1};

struct TableRow { std::string stratum; int rank; int dim; };
inline const std::vector<TableRow>& table_rows() {
  static const std::vector<TableRow> r = {
    {"I1", 2, 1},
    {"I2", 3, 2},
    {"I3", 3, 2},
    {"I4", 4, 3},
    {"I13", 4, 3},
    {"I12", 3, 2},
    {"I23", 3, 2},
    {"I24", 4, 3},
    {"I123", 4, 3},
    {"ORIGIN", 4, 3},
  };
  return r;
}

struct AkSample {
  int k;
  std::vector<std::pair<int, std::string>> x;
  std::vector<std::pair<int, std::string>> y;
  bool undetermined;
  int component;
  int order;
  std::vector<long long> point;
};

inline const std::vector<AkSample>& ak_samples() {
  static const std::vector<AkSample> r = {
    {1, {{1, "5"}}, {{1, "1"}}, false, 1, 1, {1, 0}},
    {1, {{3, "1"}, {4, "-2"}}, {{1, "1"}}, false, 2, 2, {0, 1}},
    {2, {{3, "1"}, {5, "1"}}, {{1, "1"}}, false, 3, 3, {1, 1}},
    {2, {{3, "-2"}}, {{1, "1"}, {2, "1"}}, false, 3, 3, {2, -1}},
    {3, {}, {{2, "1"}}, false, 4, 8, {0, 1}},
    {3, {{2, "1"}}, {{1, "4"}}, false, 2, 2, {1, 0}},
    {5, {{4, "1"}}, {{1, "1"}}, false, 4, 4, {1, 0}},
    {5, {{7, "1"}}, {{1, "1"}}, false, 6, 6, {0, 1}},
    {5, {{6, "3"}}, {{1, "1"}}, false, 6, 6, {3, 1}},
    {5, {}, {{3, "1"}}, true, 0, 0, {}},
  };
  return r;
}

struct ComplexSample {
  std::vector<std::string> real;  // a, b, c, ap, bp, cp
  std::string A_re, A_im, B_re, B_im, C_re, C_im;
};

inline const std::vector<ComplexSample>& complex_samples() {
  static const std::vector<ComplexSample> r = {
    {{"1", "0", "-1", "0", "1", "0"}, "3/4", "0", "0", "0", "1/4", "0"},
    {{"2", "3", "-1", "1", "0", "2"}, "3/4", "-1", "1/2", "3/2", "3/4", "1/2"},
    {{"0", "0", "0", "0", "0", "0"}, "0", "0", "0", "0", "0", "0"},
    {{"1", "1", "1", "1", "1", "1"}, "1/4", "-1/4", "1", "1", "-1/4", "1/4"},
  };
  return r;
}

inline const char* const kV2Expanded = "l3*l5 - l5*l6";
inline const char* const kV3Expanded = "5*l2*l3^2*l4 + l2*l3*l4^2 - 10*l2*l3*l4*l6 - l2*l4^2*l6 + 5*l2*l4*l6^2";
inline const char* const kV4Expanded = "-l2^3*l3^2*l4 + 2*l2^3*l3*l4*l6 - l2^3*l4*l6^2 + l2*l3^3*l4*l6 - 4*l2*l3^2*l4*l6^2 + 5*l2*l3*l4*l6^3 - 2*l2*l4*l6^4";
inline const int kV3TotalDegree = 4;
inline const int kV4TotalDegree = 6;
inline const int kV3NumTerms = 5;
inline const int kV4NumTerms = 7;

inline const std::vector<std::string> k_v2_on_I13A_anchor = {"0", "0", "0", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0"};
inline const std::vector<std::string> k_v3_on_I13A_anchor = {"0", "0", "0", "6", "0", "0", "0", "0", "0", "0", "0", "0", "0"};
inline const std::vector<std::string> k_v4_on_I13A_anchor = {"0", "0", "0", "-2", "1", "0", "0", "0", "0", "0", "0", "0", "0"};
inline const std::vector<std::string> k_u4_on_I13A_anchor = {"0", "0", "0", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0"};

inline const std::vector<std::string> kInvarianceLeadingLocalized = {"1", "1", "1", "1"};
inline const std::vector<std::string> kInvarianceLeadingGlobal = {"1", "1", "6", "-2"};

inline const char* const kQ4P = "-6*al*x^2 - 48*al*y^2 - 12*al*y + 36*x*y + 6*x";
inline const char* const kQ4Q = "24*al*x*y - 12*al*x - 12*x^2 + 24*y";
inline const int kQ4DegreeXY = 2;

inline const char* const kTriangleP = "2*x*y + x";
inline const char* const kTriangleQ = "x^2 - y^2 + y";
inline const char* const kTrianglePrimitive = "x^2*y - 1/3*y^3 + 1/2*x^2 + 1/2*y^2";

inline const char* const kDulacD_P_family = "eps*x*y + eps*y^2 + x*y + y";
inline const char* const kDulacD_Q_family = "eps*x^2 + eps*x*y + x*y + x";
inline const char* const kDulacD_P_target = "x*y + y";
inline const char* const kDulacD_Q_target = "x*y + x";
inline const char* const kDulacE_P_family = "eps*y^2 + x*y - y^2";
inline const char* const kDulacE_Q_family = "eps*x*y + x^2 + x*y";
inline const char* const kDulacE_P_target = "x*y - y^2";
inline const char* const kDulacE_Q_target = "x^2 + x*y";

inline const char* const kFieldAnchorXdot = "-x^2 + 2*x*y + y^2 - y";
inline const char* const kFieldAnchorYdot = "x^2 + 2*x*y - y^2 + x";

}  // namespace frozen
