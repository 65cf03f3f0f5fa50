// Copyright 2026 The invbzf Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "invbzf/reference.hpp"

#include <cstring>
#include <stdexcept>

namespace invbzf::reference {

namespace {

const StatsRow kOptimal[] = {
    {2, 51, {"0.2400", "0.2451", "0.0400", "0.0200", "0.0000"}, {"0.12000", "0.12255", "0.02000", "0.01000", "0.00000"}, false},
    {3, 884, {"0.2400", "0.2278", "0.1000", "0.0667", "0.0200"}, {"0.12000", "0.11391", "0.05000", "0.03333", "0.01000"}, false},
    {4, 8037, {"0.1600", "0.1622", "0.0800", "0.0600", "0.0400"}, {"0.07000", "0.07131", "0.03667", "0.03000", "0.01500"}, false},
    {5, 46262, {"0.1010", "0.1135", "0.0600", "0.0509", "0.0324"}, {"0.04000", "0.04292", "0.02273", "0.02000", "0.01077"}, false},
    {6, 189509, {"0.0667", "0.0790", "0.0400", "0.0356", "0.0200"}, {"0.02222", "0.02630", "0.01333", "0.01069", "0.00815"}, false},
    {7, 596763, {"0.0422", "0.0543", "0.0257", "0.0213", "0.0165"}, {"0.01255", "0.01629", "0.00762", "0.00667", "0.00495"}, false},
    {8, 0, {"0.0226", "0.0248", "0.0154", "0.0137", "0.0108"}, {"0.00601", "0.00661", "0.00404", "0.00358", "0.00281"}, true},
    {9, 0, {"0.0148", "0.0161", "0.0100", "0.0089", "0.0070"}, {"0.00357", "0.00393", "0.00241", "0.00216", "0.00169"}, true},
    {10, 0, {"0.0097", "0.0107", "0.0065", "0.0059", "0.0046"}, {"0.00216", "0.00239", "0.00145", "0.00129", "0.00103"}, true},
    {11, 0, {"0.0064", "0.0070", "0.0043", "0.0038", "0.0031"}, {"0.00131", "0.00146", "0.00088", "0.00079", "0.00064"}, true},
    {12, 0, {"0.0041", "0.0045", "0.0028", "0.0024", "0.0019"}, {"0.00079", "0.00088", "0.00052", "0.00047", "0.00037"}, true},
    {13, 0, {"0.0026", "0.0029", "0.0017", "0.0016", "0.0013"}, {"0.00047", "0.00053", "0.00032", "0.00028", "0.00023"}, true},
    {14, 0, {"0.0016", "0.0018", "0.0011", "0.0010", "0.0008"}, {"0.00028", "0.00032", "0.00019", "0.00017", "0.00014"}, true},
    {15, 0, {"0.0011", "0.0012", "0.0008", "0.0007", "0.0006"}, {"0.00017", "0.00019", "0.00012", "0.00011", "0.00009"}, true},
    {16, 0, {"0.0007", "0.0008", "0.0005", "0.0005", "0.0004"}, {"0.00011", "0.00012", "0.00009", "0.00008", "0.00007"}, true},
    {17, 0, {"0.0006", "0.0006", "0.0004", "0.0004", "0.0003"}, {"0.00009", "0.00009", "0.00007", "0.00007", "0.00006"}, true},
    {18, 0, {"0.0005", "0.0005", "0.0004", "0.0004", "0.0003"}, {"0.00008", "0.00008", "0.00006", "0.00006", "0.00005"}, true},
    {19, 0, {"0.0005", "0.0005", "0.0004", "0.0004", "0.0003"}, {"0.00008", "0.00008", "0.00006", "0.00006", "0.00005"}, true},
    {20, 0, {"0.0005", "0.0005", "0.0004", "0.0004", "0.0003"}, {"0.00007", "0.00007", "0.00006", "0.00005", "0.00004"}, true},
};
const StatsRow kHalf[] = {
    {2, 51, {"0.480", "0.480", "0.080", "0.020", "0.000"}, {"0.240", "0.240", "0.040", "0.010", "0.000"}, false},
    {3, 884, {"0.560", "0.555", "0.200", "0.133", "0.047"}, {"0.280", "0.278", "0.100", "0.067", "0.023"}, false},
    {4, 8037, {"0.440", "0.509", "0.200", "0.153", "0.080"}, {"0.210", "0.249", "0.083", "0.063", "0.033"}, false},
    {5, 46262, {"0.347", "0.448", "0.160", "0.127", "0.075"}, {"0.153", "0.209", "0.061", "0.049", "0.029"}, false},
    {6, 189509, {"0.297", "0.389", "0.129", "0.103", "0.066"}, {"0.120", "0.177", "0.045", "0.035", "0.023"}, false},
    {7, 596763, {"0.247", "0.338", "0.101", "0.080", "0.052"}, {"0.097", "0.151", "0.033", "0.025", "0.016"}, false},
    {8, 1527675, {"0.206", "0.297", "0.080", "0.063", "0.041"}, {"0.080", "0.132", "0.025", "0.019", "0.012"}, false},
    {9, 3314203, {"0.176", "0.265", "0.064", "0.051", "0.034"}, {"0.068", "0.118", "0.020", "0.015", "0.009"}, false},
    {10, 6292069, {"0.153", "0.240", "0.053", "0.043", "0.029"}, {"0.059", "0.107", "0.016", "0.012", "0.007"}, false},
    {11, 10718685, {"0.136", "0.220", "0.046", "0.037", "0.025"}, {"0.052", "0.099", "0.014", "0.010", "0.006"}, false},
    {12, 16713148, {"0.123", "0.205", "0.041", "0.033", "0.023"}, {"0.047", "0.092", "0.012", "0.009", "0.005"}, false},
    {13, 24234058, {"0.112", "0.193", "0.038", "0.030", "0.021"}, {"0.044", "0.087", "0.011", "0.008", "0.005"}, false},
    {14, 33097743, {"0.104", "0.183", "0.035", "0.028", "0.020"}, {"0.041", "0.083", "0.010", "0.008", "0.004"}, false},
    {15, 43018955, {"0.097", "0.175", "0.033", "0.027", "0.019"}, {"0.038", "0.079", "0.010", "0.007", "0.004"}, false},
    {16, 53662038, {"0.092", "0.169", "0.032", "0.026", "0.018"}, {"0.037", "0.076", "0.009", "0.007", "0.004"}, false},
    {17, 64684584, {"0.087", "0.164", "0.031", "0.025", "0.017"}, {"0.035", "0.074", "0.009", "0.006", "0.004"}, false},
    {18, 75772412, {"0.084", "0.159", "0.030", "0.024", "0.017"}, {"0.034", "0.072", "0.009", "0.006", "0.003"}, false},
    {19, 86658411, {"0.081", "0.156", "0.029", "0.024", "0.016"}, {"0.033", "0.071", "0.008", "0.006", "0.003"}, false},
    {20, 97132873, {"0.078", "0.153", "0.028", "0.023", "0.016"}, {"0.032", "0.070", "0.008", "0.006", "0.003"}, false},
};
const StatsRow kQStar[] = {
    {2, 51, {"0.480", "0.480", "0.080", "0.020", "0.000"}, {"0.240", "0.240", "0.040", "0.010", "0.000"}, false},
    {3, 884, {"0.400", "0.434", "0.160", "0.107", "0.040"}, {"0.200", "0.217", "0.080", "0.053", "0.020"}, false},
    {4, 8037, {"0.340", "0.370", "0.160", "0.120", "0.060"}, {"0.147", "0.172", "0.065", "0.050", "0.025"}, false},
    {5, 46262, {"0.280", "0.312", "0.133", "0.107", "0.062"}, {"0.113", "0.138", "0.052", "0.040", "0.023"}, false},
    {6, 189509, {"0.227", "0.263", "0.109", "0.088", "0.058"}, {"0.088", "0.112", "0.038", "0.030", "0.020"}, false},
    {7, 596763, {"0.189", "0.224", "0.087", "0.070", "0.047"}, {"0.071", "0.093", "0.027", "0.021", "0.014"}, false},
    {8, 1527675, {"0.158", "0.192", "0.066", "0.053", "0.035"}, {"0.056", "0.079", "0.020", "0.015", "0.010"}, false},
    {9, 3314203, {"0.133", "0.168", "0.051", "0.040", "0.026"}, {"0.047", "0.068", "0.014", "0.011", "0.007"}, false},
    {10, 6292069, {"0.114", "0.148", "0.039", "0.030", "0.019"}, {"0.039", "0.060", "0.011", "0.008", "0.005"}, false},
    {11, 10718685, {"0.098", "0.132", "0.030", "0.023", "0.014"}, {"0.033", "0.054", "0.008", "0.006", "0.003"}, false},
    {12, 16713148, {"0.086", "0.120", "0.024", "0.017", "0.010"}, {"0.029", "0.049", "0.006", "0.004", "0.002"}, false},
    {13, 24234058, {"0.075", "0.110", "0.019", "0.013", "0.007"}, {"0.026", "0.045", "0.005", "0.003", "0.002"}, false},
    {14, 33097743, {"0.068", "0.102", "0.016", "0.011", "0.005"}, {"0.023", "0.042", "0.004", "0.003", "0.001"}, false},
    {15, 43018955, {"0.061", "0.096", "0.013", "0.008", "0.004"}, {"0.021", "0.040", "0.003", "0.002", "0.001"}, false},
    {16, 53662038, {"0.056", "0.091", "0.011", "0.007", "0.003"}, {"0.019", "0.038", "0.003", "0.002", "0.001"}, false},
    {17, 64684584, {"0.052", "0.087", "0.009", "0.006", "0.003"}, {"0.018", "0.036", "0.002", "0.001", "0.001"}, false},
    {18, 75772412, {"0.049", "0.083", "0.008", "0.005", "0.002"}, {"0.017", "0.035", "0.002", "0.001", "0.000"}, false},
    {19, 86658411, {"0.046", "0.081", "0.007", "0.004", "0.002"}, {"0.016", "0.034", "0.002", "0.001", "0.000"}, false},
    {20, 97132873, {"0.044", "0.078", "0.006", "0.004", "0.002"}, {"0.015", "0.033", "0.002", "0.001", "0.000"}, false},
};
const StatsRow kQBar[] = {
    {2, 51, {"0.280", "0.327", "0.040", "0.020", "0.000"}, {"0.140", "0.164", "0.020", "0.010", "0.000"}, false},
    {3, 884, {"0.320", "0.332", "0.140", "0.100", "0.040"}, {"0.160", "0.166", "0.070", "0.050", "0.020"}, false},
    {4, 8037, {"0.300", "0.304", "0.147", "0.110", "0.050"}, {"0.130", "0.138", "0.063", "0.045", "0.020"}, false},
    {5, 46262, {"0.250", "0.263", "0.132", "0.100", "0.060"}, {"0.101", "0.111", "0.050", "0.040", "0.023"}, false},
    {6, 189509, {"0.204", "0.224", "0.104", "0.085", "0.056"}, {"0.077", "0.088", "0.036", "0.029", "0.019"}, false},
    {7, 596763, {"0.159", "0.187", "0.079", "0.064", "0.043"}, {"0.057", "0.069", "0.024", "0.020", "0.013"}, false},
    {8, 1527675, {"0.120", "0.155", "0.058", "0.047", "0.033"}, {"0.041", "0.055", "0.017", "0.013", "0.009"}, false},
    {9, 3314203, {"0.098", "0.133", "0.044", "0.036", "0.024"}, {"0.033", "0.046", "0.012", "0.010", "0.006"}, false},
    {10, 6292069, {"0.079", "0.115", "0.033", "0.026", "0.018"}, {"0.026", "0.039", "0.009", "0.007", "0.004"}, false},
    {11, 10718685, {"0.071", "0.103", "0.027", "0.021", "0.014"}, {"0.023", "0.035", "0.007", "0.005", "0.003"}, false},
    {12, 16713148, {"0.058", "0.092", "0.021", "0.016", "0.010"}, {"0.018", "0.030", "0.005", "0.004", "0.002"}, false},
    {13, 24234058, {"0.050", "0.084", "0.016", "0.012", "0.007"}, {"0.015", "0.027", "0.004", "0.003", "0.002"}, false},
    {14, 33097743, {"0.045", "0.078", "0.014", "0.010", "0.006"}, {"0.014", "0.025", "0.003", "0.002", "0.001"}, false},
    {15, 43018955, {"0.042", "0.074", "0.012", "0.009", "0.005"}, {"0.012", "0.024", "0.003", "0.002", "0.001"}, false},
    {16, 53662038, {"0.039", "0.070", "0.011", "0.007", "0.004"}, {"0.011", "0.022", "0.002", "0.002", "0.001"}, false},
    {17, 64684584, {"0.040", "0.070", "0.011", "0.008", "0.004"}, {"0.012", "0.023", "0.002", "0.002", "0.001"}, false},
    {18, 75772412, {"0.037", "0.067", "0.009", "0.007", "0.003"}, {"0.011", "0.022", "0.002", "0.001", "0.001"}, false},
    {19, 86658411, {"0.041", "0.069", "0.011", "0.008", "0.004"}, {"0.013", "0.024", "0.002", "0.002", "0.001"}, false},
    {20, 97132873, {"0.038", "0.067", "0.010", "0.007", "0.003"}, {"0.012", "0.023", "0.002", "0.001", "0.001"}, false},
};
const FamilyRow kFamilyD1[] = {
    {2, "0.333333", "0.333333", 0, "0.333333", 0, "0.333333", "0.000000"},
    {3, "0.266667", "0.266667", 0, "0.266667", 0, "0.266667", "0.000000"},
    {4, "0.214286", "0.214286", 0, "0.214286", 0, "0.214286", "0.000000"},
    {5, "0.038647", "0.158730", 0, "0.158730", 0, "0.177778", "0.120000"},
    {6, "0.000000", "0.113636", 0, "0.113636", 0, "0.151515", "0.333333"},
    {7, "0.000000", "0.085470", 0, "0.085470", 0, "0.131868", "0.542857"},
    {8, "0.000000", "0.066667", 0, "0.066667", 0, "0.116667", "0.750000"},
    {9, "0.000000", "0.064171", 0, "0.064171", 0, "0.104575", "0.629630"},
    {10, "0.000000", "0.061042", 0, "0.061042", 0, "0.094737", "0.552000"},
    {11, "0.000000", "0.052158", 0, "0.052158", 0, "0.086580", "0.659944"},
    {12, "0.000000", "0.047254", 0, "0.047254", 0, "0.079710", "0.686856"},
    {13, "0.000000", "0.042353", 0, "0.042353", 0, "0.073846", "0.743590"},
    {14, "0.000000", "0.037037", 0, "0.037037", 0, "0.068783", "0.857143"},
    {15, "0.000000", "0.034483", 2, "0.034483", 1, "0.064368", "0.866667"},
    {16, "0.000000", "0.033845", 2, "0.033845", 1, "0.060484", "0.780576"},
    {17, "0.000000", "0.032221", 2, "0.032221", 1, "0.057041", "0.770270"},
    {18, "0.000000", "0.030866", 2, "0.030866", 1, "0.053968", "0.748490"},
    {19, "", "0.028108", 2, "0.028108", 1, "0.051209", "0.821862"},
    {20, "", "0.025641", 2, "0.025641", 1, "0.048718", "0.900000"},
};
const FamilyRow kFamilyDInf[] = {
    {2, "0.166667", "0.166667", 0, "0.166667", 0, "0.166667", "0.000000"},
    {3, "0.133333", "0.133333", 0, "0.133333", 0, "0.133333", "0.000000"},
    {4, "0.107143", "0.107143", 0, "0.107143", 0, "0.107143", "0.000000"},
    {5, "0.019324", "0.050505", 0, "0.050505", 0, "0.088889", "0.760000"},
    {6, "0.000000", "0.034759", 0, "0.034759", 0, "0.075758", "1.179487"},
    {7, "0.000000", "0.022624", 0, "0.022624", 0, "0.065934", "1.914286"},
    {8, "0.000000", "0.015686", 0, "0.015686", 0, "0.058333", "2.718750"},
    {9, "0.000000", "0.014199", 0, "0.014199", 0, "0.052288", "2.682540"},
    {10, "0.000000", "0.008772", 0, "0.008772", 0, "0.047368", "4.400000"},
    {11, "0.000000", "0.008282", 0, "0.008282", 0, "0.043290", "4.227273"},
    {12, "0.000000", "0.007688", 0, "0.007688", 0, "0.039855", "4.183908"},
    {13, "0.000000", "0.005373", 0, "0.005373", 0, "0.036923", "5.871795"},
    {14, "0.000000", "0.005109", 0, "0.005109", 0, "0.034392", "5.732143"},
    {15, "0.000000", "0.004628", 1, "0.004815", 1, "0.032184", "5.954839"},
    {16, "0.000000", "0.003619", 2, "0.003619", 1, "0.030242", "7.357143"},
    {17, "0.000000", "0.003463", 2, "0.003463", 1, "0.028520", "7.235294"},
    {18, "0.000000", "0.003297", 2, "0.003297", 1, "0.026984", "7.185185"},
    {19, "", "0.002600", 2, "0.002600", 1, "0.025605", "8.848225"},
    {20, "", "0.002502", 2, "0.002502", 1, "0.024359", "8.737500"},
};
const CouncilRow kCouncilD1[] = {
    {6, "0.051857", 0, "0.051857", 0, "0.051857", 0, "0.300398", "0.091100", "0.091100"},
    {9, "0.005294", 1, "0.008641", 0, "0.010359", 0, "0.065528", "0.060195", "0.069792"},
    {10, "0.002639", 1, "0.004840", 0, "0.007219", 0, "0.038751", "0.033229", "0.026466"},
    {12, "0.001033", 1, "0.001033", 1, "0.005170", 1, "0.028700", "0.019827", "0.019827"},
    {15, "0.000476", 2, "0.000476", 2, "0.000476", 1, "0.026742", "0.006820", "0.006361"},
    {25, "0.000000", 2, "0.000000", 2, "0.000000", 1, "0.019422", "0.000744", "0.003096"},
    {27, "0.000000", 2, "0.000000", 2, "0.000000", 1, "0.018003", "0.000633", "0.002457"},
};

const CountRow kCounts[] = {
    {1, 1, 1, 1},         {2, 3, 3, 3},
    {3, 8, 8, 8},         {4, 28, 25, 25},
    {5, 208, 117, 117},   {6, 16351, 1171, 1111},
    {7, 0, 44313, 29373}, {8, 0, 16175188, 2730164},
    {9, 0, 284432730174, 989913344},
};

}  // namespace

std::span<const StatsRow> grid_stats(GridRule rule) {
  switch (rule) {
    case GridRule::kHalf: return kHalf;
    case GridRule::kQStar: return kQStar;
    case GridRule::kQBar: return kQBar;
    case GridRule::kOptimal: return kOptimal;
  }
  throw std::invalid_argument("unknown grid rule");
}

std::span<const CountRow> class_counts() { return kCounts; }

std::span<const FamilyRow> family_table(MetricKind metric) {
  if (metric == MetricKind::kD1) return kFamilyD1;
  if (metric == MetricKind::kDInf) return kFamilyDInf;
  throw std::invalid_argument("family tables exist for d1 and dinf");
}

std::span<const CouncilRow> council_d1() { return kCouncilD1; }

double cell_tolerance(const char* printed) {
  const char* dot = std::strchr(printed, '.');
  int decimals = dot ? static_cast<int>(std::strlen(dot + 1)) : 0;
  double half_ulp = 0.5;
  while (decimals-- > 0) half_ulp /= 10;
  return half_ulp;
}

}  // namespace invbzf::reference
