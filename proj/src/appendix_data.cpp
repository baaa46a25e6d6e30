#include "ehb/appendix_data.hpp"

namespace ehb::appendix {

// One row per listed realization; vertex order as printed.
const std::vector<GoldenRow>& golden_rows() {
  static const std::vector<GoldenRow> rows = {
      {1, "40v2", 'O', "d3", "0,0,0,1;0,0;0", "NR"},
      {1, "40v2", 'O', "e1", "0,0,0,0;0,1;0", "NR"},
      {1, "40v2", 'O', "f01", "-1/2,-1/2,1/2,1/2;1/2,1/2;1/2", "S"},
      {1, "40v2", 'O', "g00", "-1/2,1/2,1/2,1/2;-1/2,1/2;1/2", "S"},
      {1, "40v2", 'O', "h01", "1/2,1/2,1/2,1/2;-1/2,-1/2;1/2", "S"},
      {2, "31vp", 'O', "e1,d3", "0,0,0,1/2;0,1/2;0", "NR"},
      {2, "31vp", 'O', "f01,g00", "-1/2,0,1/2,1/2;0,1/2;1/2", "S"},
      {2, "31vp", 'O', "g00,h01", "0,1/2,1/2,1/2;-1/2,0;1/2", "S"},
      {2, "2200vv", 'O', "e1,f01", "-1/4,-1/4,1/4,1/4;1/4,3/4;1/4", "S2"},
      {2, "2200vv", 'O', "d3,g00", "-1/4,1/4,1/4,3/4;-1/4,1/4;1/4", "S2"},
      {2, "3100v2", 'O', "e1,g00", "-1/4,1/4,1/4,1/4;-1/4,3/4;1/4", "S2"},
      {2, "3100v2", 'O', "d3,f01", "-1/4,-1/4,1/4,3/4;1/4,1/4;1/4", "S2"},
      {2, "3100v2", 'O', "d3,h01", "1/4,1/4,1/4,3/4;-1/4,-1/4;1/4", "S2"},
      {2, "22v2", 'O', "d2,d3", "0,0,1/2,1/2;0,0;0", "NR"},
      {2, "22v2", 'O', "f01,f02", "-1/2,0,0,1/2;1/2,1/2;1/2", "S"},
      {2, "40as", 'O', "e0,e1", "0,0,0,0;1/2,1/2;0", "NR"},
      {2, "40as", 'O', "g00,g01", "-1/2,1/2,1/2,1/2;0,0;1/2", "S"},
      {3, "22vp", 'O', "d2,d3,e1", "0,0,1/3,1/3;0,1/3;0", "NR"},
      {3, "22vp", 'O', "f01,g00,g10", "-1/6,-1/6,1/2,1/2;-1/6,1/2;1/2", "SB"},
      {3, "22vp", 'F', "f01,f02,g00", "-1/2,1/6,1/6,1/2;1/6,1/2;1/2", "S"},
      {3, "22vp", 'F', "g00,g10,h01", "1/6,1/6,1/2,1/2;-1/2,1/6;1/2", "S"},
      {3, "2110vp", 'O', "d3,e1,f01", "-1/6,-1/6,1/6,1/2;1/6,1/2;1/6", "S2"},
      {3, "2110vp", 'O', "d3,g00,h01", "0,1/3,1/3,2/3;-1/3,0;1/3", "S"},
      {3, "2110vp", 'O', "e1,g00,f01", "-1/3,0,1/3,1/3;0,2/3;1/3", "S"},
      {3, "2110vp", 'F', "d3,e1,g00", "-1/6,1/6,1/6,1/2;-1/6,1/2;1/6", "S2"},
      {3, "2110vp", 'F', "d3,f01,g00", "-1/3,0,1/3,2/3;0,1/3;1/3", "S"},
      {3, "1120vv", 'O', "d2,d3,g00", "-1/6,1/6,1/2,1/2;-1/6,1/6;1/6", "S2"},
      {3, "1120vv", 'O', "d3,g00,g10", "0,0,1/3,2/3;-1/3,1/3;1/3", "S"},
      {3, "1120vv", 'O', "e1,f01,f02", "-1/3,0,0,1/3;1/3,2/3;1/3", "S"},
      {3, "2020v2", 'O', "d2,d3,f01", "-1/6,-1/6,1/2,1/2;1/6,1/6;1/6", "S2"},
      {3, "2020v2", 'O', "e1,g00,g10", "0,0,1/3,1/3;-1/3,2/3;1/3", "S"},
      {3, "2020v2", 'F', "d2,d3,h01", "1/6,1/6,1/2,1/2;-1/6,-1/6;1/6", "S2"},
      {3, "2020v2", 'F', "d3,f01,f02", "-1/3,0,0,2/3;1/3,1/3;1/3", "S"},
      {3, "13v2", 'O', "d1,d2,d3", "0,1/3,1/3,1/3;0,0;0", "NR"},
      {3, "13v2", 'O', "f01,f02,f12", "-1/6,-1/6,-1/6,1/2;1/2,1/2;1/2", "SB"},
      {3, "13v2", 'F', "f01,f02,f03", "-1/2,1/6,1/6,1/6;1/2,1/2;1/2", "S"},
      {3, "13v2", 'F', "g00,g10,g20", "1/6,1/6,1/6,1/2;-1/2,1/2;1/2", "S"},
      {3, "31as", 'O', "d3,e1,e0", "0,0,0,1/3;1/3,1/3;0", "NR"},
      {3, "31as", 'O', "g00,g01,h01", "-1/6,1/2,1/2,1/2;-1/6,-1/6;1/2", "SB"},
      {3, "31as", 'F', "f01,g00,g01", "-1/2,1/6,1/2,1/2;1/6,1/6;1/2", "S"},
      {3, "2200as", 'O', "d3,g00,g01", "-1/3,1/3,1/3,2/3;0,0;1/3", "S"},
      {3, "2200as", 'O', "e0,e1,f01", "-1/6,-1/6,1/6,1/6;1/2,1/2;1/6", "S2"},
      {4, "13vp", 'O', "d1,d2,d3,e1", "0,1/4,1/4,1/4;0,1/4;0", "NR"},
      {4, "13vp", 'F', "f01,f02,f03,g00", "-1/2,1/4,1/4,1/4;1/4,1/2;1/2", "S"},
      {4, "13vp", 'F', "g00,g10,g20,h01", "1/4,1/4,1/4,1/2;-1/2,1/4;1/2", "S"},
      {4, "2020vp", 'O', "d2,d3,e1,f01", "-1/8,-1/8,3/8,3/8;1/8,3/8;1/8", "S2"},
      {4, "2020vp", 'O', "e1,f01,g00,g10", "-1/8,-1/8,3/8,3/8;-1/8,5/8;3/8", "SB"},
      {4, "2020vp", 'F', "d3,f01,f02,g00", "-3/8,1/8,1/8,5/8;1/8,3/8;3/8", "S"},
      {4, "1021vp", 'O', "d2,d3,f01,g00", "-1/4,0,1/2,1/2;0,1/4;1/4", "S"},
      {4, "1021vp", 'O', "d3,e1,g00,g10", "0,0,1/4,1/2;-1/4,1/2;1/4", "S"},
      {4, "1021vp", 'F', "d2,d3,g00,h01", "0,1/4,1/2,1/2;-1/4,0;1/4", "S"},
      {4, "1021vp", 'F', "d3,e1,f01,f02", "-1/4,0,0,1/2;1/4,1/2;1/4", "S"},
      {4, "1030vv", 'O', "d1,d2,d3,g00", "-1/8,3/8,3/8,3/8;-1/8,1/8;1/8", "S2"},
      {4, "1030vv", 'O', "e1,f01,f02,f12", "-1/8,-1/8,-1/8,3/8;3/8,5/8;3/8", "SB"},
      {4, "1030vv", 'F', "d3,g00,g10,g20", "1/8,1/8,1/8,5/8;-3/8,3/8;3/8", "S"},
      {4, "1030vv", 'F', "e1,f01,f02,f03", "-3/8,1/8,1/8,1/8;3/8,5/8;3/8", "S"},
      {4, "1111pp", 'O', "d3,e1,f01,g00", "-1/4,0,1/4,1/2;0,1/2;1/4", "S"},
      {4, "1120vp", 'O', "d2,d3,e1,g00", "-1/8,1/8,3/8,3/8;-1/8,3/8;1/8", "S2"},
      {4, "1120vp", 'O', "d3,f01,g00,g10", "-1/8,-1/8,3/8,5/8;-1/8,3/8;3/8", "SB"},
      {4, "1120vp", 'F', "d3,g00,g10,h01", "1/8,1/8,3/8,5/8;-3/8,1/8;3/8", "S"},
      {4, "1120vp", 'F', "e1,f01,f02,g00", "-3/8,1/8,1/8,3/8;1/8,5/8;3/8", "S"},
      {4, "0022vv", 'O', "d2,d3,g00,g10", "0,0,1/2,1/2;-1/4,1/4;1/4", "S"},
      {4, "1030v2", 'O', "d1,d2,d3,h01", "1/8,3/8,3/8,3/8;-1/8,-1/8;1/8", "S2"},
      {4, "1030v2", 'O', "d3,f01,f02,f12", "-1/8,-1/8,-1/8,5/8;3/8,3/8;3/8", "SB"},
      {4, "1030v2", 'F', "e1,g00,g10,g20", "1/8,1/8,1/8,3/8;-3/8,5/8;3/8", "S"},
      {4, "04v2", 'O', "d0,d1,d2,d3", "1/4,1/4,1/4,1/4;0,0;0", "NR"},
      {4, "04v2", 'F', "g00,g10,g20,g30", "1/4,1/4,1/4,1/4;-1/2,1/2;1/2", "S"},
      {4, "22as", 'O', "d2,d3,e0,e1", "0,0,1/4,1/4;1/4,1/4;0", "NR"},
      {4, "22as", 'F', "f01,f02,g00,g01", "-1/2,1/4,1/4,1/2;1/4,1/4;1/2", "S"},
      {4, "2110as", 'O', "d3,e0,e1,f01", "-1/8,-1/8,1/8,3/8;3/8,3/8;1/8", "S2"},
      {4, "2110as", 'O', "d3,g00,g01,h01", "-1/8,3/8,3/8,5/8;-1/8,-1/8;3/8", "SB"},
      {4, "2110as", 'F', "d3,f01,g00,g01", "-3/8,1/8,3/8,5/8;1/8,1/8;3/8", "S"},
      {4, "1120as", 'O', "d2,d3,g00,g01", "-1/4,1/4,1/2,1/2;0,0;1/4", "S"},
      {4, "1120as", 'O', "e0,e1,f01,f02", "-1/4,0,0,1/4;1/2,1/2;1/4", "S"},
      {5, "04vp", 'O', "d0,d1,d2,d3,e1", "1/5,1/5,1/5,1/5;0,1/5;0", "NR"},
      {5, "04vp", 'F', "g00,g10,g20,g30,h01", "3/10,3/10,3/10,3/10;-1/2,3/10;1/2", "S"},
      {5, "0031vp", 'O', "d1,d2,d3,g00,h01", "0,2/5,2/5,2/5;-1/5,0;1/5", "SB"},
      {5, "0031vp", 'O', "d3,e1,f01,f02,f12", "-1/10,-1/10,-1/10,1/2;3/10,1/2;3/10", "SB"},
      {5, "0031vp", 'F', "d3,e1,g00,g10,g20", "1/10,1/10,1/10,1/2;-3/10,1/2;3/10", "S"},
      {5, "1021pp", 'O', "d2,d3,e1,f01,g00", "-1/5,0,2/5,2/5;0,2/5;1/5", "SB"},
      {5, "1021pp", 'O', "d3,e1,f01,g00,g10", "-1/10,-1/10,3/10,1/2;-1/10,1/2;3/10", "SB"},
      {5, "1021pp", 'F', "e1,d3,f01,f02,g00", "-3/10,1/10,1/10,1/2;1/10,1/2;3/10", "S"},
      {5, "0022vp", 'O', "d2,d3,e1,g00,g10", "0,0,2/5,2/5;-1/5,2/5;1/5", "SB"},
      {5, "0022vp", 'O', "d2,d3,f01,g00,g10", "-1/10,-1/10,1/2,1/2;-1/10,3/10;3/10", "SB"},
      {5, "0022vp", 'F', "d2,d3,g00,g10,h01", "1/10,1/10,1/2,1/2;-3/10,1/10;3/10", "S"},
      {5, "0040v2", 'O', "d0,d1,d2,d3,h01", "3/10,3/10,3/10,3/10;-1/10,-1/10;1/10", "S2"},
      {5, "0040v2", 'F', "e1,g00,g10,g20,g30", "1/5,1/5,1/5,1/5;-2/5,3/5;2/5", "S"},
      {5, "1030vp", 'O', "d1,d2,d3,e1,g00", "-1/10,3/10,3/10,3/10;-1/10,3/10;1/10", "S2"},
      {5, "1030vp", 'F', "d3,g00,g10,g20,h01", "1/5,1/5,1/5,3/5;-2/5,1/5;2/5", "S"},
      {5, "1030vp", 'F', "e1,f01,f02,f03,g00", "-2/5,1/5,1/5,1/5;1/5,3/5;2/5", "S"},
      {5, "13as", 'O', "d1,d2,d3,e0,e1", "0,1/5,1/5,1/5;1/5,1/5;0", "NR"},
      {5, "13as", 'F', "f01,f02,f03,g00,g01", "-1/2,3/10,3/10,3/10;3/10,3/10;1/2", "S"},
      {5, "2020as", 'O', "d2,d3,e0,e1,f01", "-1/10,-1/10,3/10,3/10;3/10,3/10;1/10", "S2"},
      {5, "2020as", 'F', "d3,f01,f02,g00,g01", "-2/5,1/5,1/5,3/5;1/5,1/5;2/5", "S"},
      {5, "1021as", 'O', "d3,e0,e1,f01,f02", "-1/5,0,0,2/5;2/5,2/5;1/5", "SB"},
      {5, "1021as", 'O', "d2,d3,g00,g01,h01", "-1/10,3/10,1/2,1/2;-1/10,-1/10;3/10", "SB"},
      {5, "1021as", 'F', "d2,d3,f01,g00,g01", "-3/10,1/10,1/2,1/2;1/10,1/10;3/10", "S"},
      {5, "1030as", 'O', "d1,d2,d3,g00,g01", "-1/5,2/5,2/5,2/5;0,0;1/5", "SB"},
      {5, "1030as", 'O', "e0,e1,f01,f02,f12", "-1/10,-1/10,-1/10,3/10;1/2,1/2;3/10", "SB"},
      {5, "1030as", 'F', "e0,e1,f01,f02,f03", "-3/10,1/10,1/10,1/10;1/2,1/2;3/10", "S"},
      {6, "0022pp", 'O', "d2,d3,e1,f01,g00,g10", "-1/12,-1/12,5/12,5/12;-1/12,5/12;1/4", "SB"},
      {6, "04as", 'O', "d0,d1,d2,d3,e0,e1", "1/6,1/6,1/6,1/6;1/6,1/6;0", "NR"},
      {6, "0031as", 'O', "d1,d2,d3,g00,g01,h01", "-1/12,5/12,5/12,5/12;-1/12,-1/12;1/4", "SB"},
      {6, "0031as", 'O', "d3,e0,e1,f01,f02,f12", "-1/12,-1/12,-1/12,5/12;5/12,5/12;1/4", "SB"},
  };
  return rows;
}

const std::vector<AskeyRow>& askey_rows() {
  static const std::vector<AskeyRow> rows = {
      {"2/4", "0,0,0,0;1/2,1/2;0", "40as", "Askey-Wilson", "q-Racah"},
      {"2/6", "0,0,0,1/3;1/3,1/3;0", "31as", "Continuous dual q-Hahn", "Dual q-Hahn"},
      {"3/6", "-1/6,-1/6,1/6,1/6;1/2,1/2;1/6", "2200as", "Big q-Jacobi", "q-Hahn"},
      {"4/6", "-1/3,0,0,0;2/3,2/3;0", "31as", "?", "?"},
      {"2/8", "0,0,1/4,1/4;1/4,1/4;0", "22as", "Al-Salam Chihara", "Dual q-Krawtchouk"},
      {"3/8", "-1/8,-1/8,1/8,3/8;3/8,3/8;1/8", "2110as", "Big q-Laguerre", "affine q-Krawtchouk"},
      {"4/8", "-1/4,0,0,1/4;1/2,1/2;1/4", "1120as", "Little q-Jacobi", "q-Krawtchouk"},
      {"5/8", "-3/8,-1/8,1/8,1/8;5/8,5/8;1/8", "2110as", "q-Meixner", "quantum q-Krawtchouk"},
      {"6/8", "-1/4,-1/4,0,0;3/4,3/4;0", "22as", "Askey-Ismail", "?"},
      {"2/10", "0,1/5,1/5,1/5;1/5,1/5;0", "13as", "Continuous big q-Hermite", "-"},
      {"3/10", "-1/10,-1/10,3/10,3/10;3/10,3/10;1/10", "2020as", "Al Salam Carlitz I", "-"},
      {"4/10", "-1/5,0,0,2/5;2/5,2/5;1/5", "1021as", "Little q-Laguerre", "-"},
      {"5/10'", "-1/10,-1/10,-1/10,3/10;1/2,1/2;3/10", "1030as", "NP", "-"},
      {"5/10", "-3/10,1/10,1/10,1/10;1/2,1/2;3/10", "1030as", "Alternative q-Charlier", "-"},
      {"6/10", "-2/5,0,0,1/5;3/5,3/5;1/5", "1021as", "q-Laguerre/q-Charlier", "-"},
      {"7/10", "-3/10,-3/10,1/10,1/10;7/10,7/10;1/10", "2020as", "Al Salam Carlitz II", "-"},
      {"8/10", "-1/5,-1/5,-1/5,0;4/5,4/5;0", "13as", "?", "-"},
      {"2/12", "1/6,1/6,1/6,1/6;1/6,1/6;0", "04as", "Continuous q-Hermite", "-"},
      {"5/12", "-1/12,-1/12,-1/12,5/12;5/12,5/12;1/4", "0031as", "NP", "-"},
      {"7/12", "-5/12,1/12,1/12,1/12;7/12,7/12;1/4", "0031as", "Stieltjes-Wiegert", "-"},
      {"10/12", "-1/6,-1/6,-1/6,-1/6;5/6,5/6;0", "04as", "?", "-"},
  };
  return rows;
}

const std::vector<std::pair<std::string, std::string>>& askey_edges() {
  static const std::vector<std::pair<std::string, std::string>> edges = {
      {"10/12", "8/10"},
      {"8/10", "6/8"},
      {"6/8", "4/6"},
      {"4/6", "2/4"},
      {"2/4", "2/6"},
      {"2/6", "2/8"},
      {"2/8", "2/10"},
      {"2/10", "2/12"},
      {"2/6", "3/8"},
      {"3/8", "3/6"},
      {"3/6", "5/8"},
      {"5/8", "4/6"},
      {"2/4", "3/6"},
      {"3/6", "4/8"},
      {"4/8", "5/10'"},
      {"2/8", "3/10"},
      {"3/10", "3/8"},
      {"3/8", "4/10"},
      {"4/10", "4/8"},
      {"4/8", "6/10"},
      {"6/10", "5/8"},
      {"5/8", "7/10"},
      {"7/10", "6/8"},
      {"4/8", "5/10"},
      {"4/10", "5/12"},
      {"5/12", "5/10'"},
      {"5/10", "7/12"},
      {"7/12", "6/10"},
  };
  return edges;
}

const std::vector<std::pair<std::string, std::string>>& figure_edges() {
  static const std::vector<std::pair<std::string, std::string>> edges = {
      {"40v2", "31vp"},
      {"40v2", "2200vv"},
      {"40v2", "3100v2"},
      {"40v2", "22v2"},
      {"31vp", "22vp"},
      {"31vp", "2110vp"},
      {"2200vv", "2110vp"},
      {"2200vv", "1120vv"},
      {"3100v2", "2110vp"},
      {"3100v2", "2020v2"},
      {"22v2", "1120vv"},
      {"22v2", "2020v2"},
      {"22v2", "13v2"},
      {"22v2", "22vp"},
      {"22vp", "13vp"},
      {"22vp", "2020vp"},
      {"22vp", "1120vp"},
      {"2110vp", "1111pp"},
      {"2110vp", "2020vp"},
      {"2110vp", "1120vp"},
      {"2110vp", "1021vp"},
      {"1120vv", "1120vp"},
      {"1120vv", "1021vp"},
      {"1120vv", "0022vv"},
      {"1120vv", "1030vv"},
      {"2020v2", "2020vp"},
      {"2020v2", "1021vp"},
      {"2020v2", "1030v2"},
      {"13v2", "1030vv"},
      {"13v2", "1030v2"},
      {"13v2", "04v2"},
      {"13v2", "13vp"},
      {"13vp", "04vp"},
      {"13vp", "1030vp"},
      {"1111pp", "1021pp"},
      {"2020vp", "1021pp"},
      {"1120vp", "1021pp"},
      {"1120vp", "1030vp"},
      {"1120vp", "0022vp"},
      {"1021vp", "1021pp"},
      {"1021vp", "0022vp"},
      {"1021vp", "0031vp"},
      {"0022vv", "0022vp"},
      {"1030vv", "1030vp"},
      {"1030vv", "0031vp"},
      {"1030v2", "0031vp"},
      {"1030v2", "0040v2"},
      {"04v2", "0040v2"},
      {"04v2", "04vp"},
      {"1021pp", "0022pp"},
      {"0022vp", "0022pp"},
  };
  return edges;
}

const std::vector<std::string>& boxed_nodes() {
  static const std::vector<std::string> nodes = {"40v2",  "31vp",   "2200vv", "22vp", "2110vp", "1120vv",
                                                 "13vp",  "2020vp", "1021vp", "1030vv", "04vp", "0031vp"};
  return nodes;
}

const std::vector<std::pair<std::string, std::string>>& wrap_edges() {
  static const std::vector<std::pair<std::string, std::string>> edges = {
      {"22v2", "22vp"}, {"13v2", "13vp"}, {"04v2", "04vp"}};
  return edges;
}

}  // namespace ehb::appendix
