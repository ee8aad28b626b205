#include "satip_cli/fixtures.hpp"

namespace satip::cli {

const std::vector<KroneckerFixture>& kronecker_fixtures() {
  // Rows 1-15 come from the first table, 16-30 from its continuation.
  static const std::vector<KroneckerFixture> rows = {
    {{87, 62}, {97, 52}, {64, 39, 24, 22}, {"1/2", "4", "11/2"}, {"1", "4", "11/2"}, {"1", "8", "11", "2"}, {"1", "-2", "0", "2", "-1"}},
    {{104, 95}, {149, 50}, {95, 78, 15, 11}, {"1/2", "13/2", "18"}, {"1", "13/2", "18"}, {"1", "23", "36", "12"}, {"1", "-2", "0", "2", "-1"}},
    {{101, 85}, {102, 84}, {78, 72, 24, 12}, {"0", "17/2", "71/2"}, {"1", "17/2", "71/2"}, {"1", "42", "72", "27"}, {"1", "-2", "0", "2", "-1"}},
    {{79, 63}, {93, 49}, {88, 37, 14, 3}, {"3/4", "27/2", "303/4"}, {"1", "27/2", "303/4"}, {"1", "88", "151", "63"}, {"1", "-2", "0", "2", "-1"}},
    {{97, 93}, {114, 76}, {77, 66, 47, 0}, {"1/2", "15/2", "21"}, {"1", "15/2", "21"}, {"1", "27", "42", "14"}, {"1", "-2", "0", "2", "-1"}},
    {{88, 56}, {113, 31}, {99, 35, 7, 3}, {"1/2", "11/2", "10"}, {"1", "11/2", "10"}, {"1", "14", "20", "5"}, {"1", "-2", "0", "2", "-1"}},
    {{134, 82}, {140, 76}, {91, 72, 49, 4}, {"3/4", "21", "669/4"}, {"1", "21", "669/4"}, {"1", "187", "334", "147"}, {"1", "-2", "0", "2", "-1"}},
    {{133, 69}, {149, 53}, {98, 55, 43, 6}, {"1", "6", "8"}, {"1", "6", "8"}, {"1", "13", "15", "3"}, {"1", "-3", "3", "-1"}},
    {{80, 63}, {111, 32}, {88, 38, 10, 7}, {"1"}, {"1"}, {"1", "1"}, {"1", "-1"}},
    {{118, 69}, {151, 36}, {95, 63, 20, 9}, {"1", "4", "4"}, {"1", "4", "4"}, {"1", "7", "7", "1"}, {"1", "-3", "3", "-1"}},
    {{96, 51}, {103, 44}, {90, 53, 3, 1}, {"1/2", "39/2", "36"}, {"1", "39/2", "36"}, {"1", "54", "72", "17"}, {"1", "-2", "0", "2", "-1"}},
    {{117, 72}, {133, 56}, {82, 57, 41, 9}, {"1", "9", "18"}, {"1", "9", "18"}, {"1", "26", "35", "10"}, {"1", "-3", "3", "-1"}},
    {{72, 63}, {77, 58}, {49, 38, 28, 20}, {"1/2", "7", "55/2"}, {"1", "7", "55/2"}, {"1", "33", "55", "21"}, {"1", "-2", "0", "2", "-1"}},
    {{48, 37}, {49, 36}, {34, 24, 16, 11}, {"1/2", "6", "37/2"}, {"1", "6", "37/2"}, {"1", "23", "37", "13"}, {"1", "-2", "0", "2", "-1"}},
    {{108, 56}, {113, 51}, {73, 50, 29, 12}, {"1", "4", "4"}, {"1", "4", "4"}, {"1", "7", "7", "1"}, {"1", "-3", "3", "-1"}},
    {{77, 40}, {78, 39}, {58, 29, 24, 6}, {"1", "19/2", "57/2"}, {"1", "19/2", "57/2"}, {"1", "37", "56", "20"}, {"1", "-3", "3", "-1"}},
    {{153, 81}, {157, 77}, {96, 63, 61, 14}, {"1", "3", "2"}, {"1", "3", "2"}, {"1", "4", "3"}, {"1", "-3", "3", "-1"}},
    {{90, 89}, {102, 77}, {90, 42, 30, 17}, {"1/2", "13/2", "6"}, {"1", "13/2", "6"}, {"1", "11", "12"}, {"1", "-2", "0", "2", "-1"}},
    {{145, 102}, {160, 87}, {96, 84, 39, 28}, {"1", "10", "25"}, {"1", "10", "25"}, {"1", "34", "49", "16"}, {"1", "-3", "3", "-1"}},
    {{109, 95}, {136, 68}, {78, 60, 46, 20}, {"1", "3", "2"}, {"1", "3", "2"}, {"1", "4", "3"}, {"1", "-3", "3", "-1"}},
    {{100, 42}, {104, 38}, {85, 27, 27, 3}, {"1", "8"}, {"1", "8"}, {"1", "8", "7"}, {"1", "-2", "1"}},
    {{74, 51}, {86, 39}, {52, 34, 26, 13}, {"1"}, {"1"}, {"1", "1"}, {"1", "-1"}},
    {{98, 90}, {124, 64}, {92, 67, 22, 7}, {"1/2", "23/2", "60"}, {"1", "23/2", "60"}, {"1", "70", "120", "49"}, {"1", "-2", "0", "2", "-1"}},
    {{57, 38}, {75, 20}, {52, 25, 17, 1}, {"1", "3", "2"}, {"1", "3", "2"}, {"1", "4", "3"}, {"1", "-3", "3", "-1"}},
    {{159, 140}, {170, 129}, {89, 82, 73, 55}, {"1", "3/2", "1/2"}, {"1", "3/2", "1/2"}, {"1", "1"}, {"1", "-3", "3", "-1"}},
    {{144, 122}, {157, 109}, {88, 86, 74, 18}, {"3/4", "1", "1/4"}, {"1", "1", "1/4"}, {"1"}, {"1", "-2", "0", "2", "-1"}},
    {{90, 68}, {92, 66}, {88, 37, 23, 10}, {"1/4", "12", "351/4"}, {"1", "12", "351/4"}, {"1", "98", "176", "76"}, {"1", "-2", "0", "2", "-1"}},
    {{89, 42}, {100, 31}, {76, 28, 19, 8}, {"1", "6", "8"}, {"1", "6", "8"}, {"1", "13", "15", "3"}, {"1", "-3", "3", "-1"}},
    {{88, 56}, {107, 37}, {71, 39, 20, 14}, {"1", "9/2", "9/2"}, {"1", "9/2", "9/2"}, {"1", "8", "8", "1"}, {"1", "-3", "3", "-1"}},
    {{124, 111}, {133, 102}, {98, 89, 27, 21}, {"1/2", "7", "53/2"}, {"1", "7", "53/2"}, {"1", "32", "53", "20"}, {"1", "-2", "0", "2", "-1"}},
  };
  return rows;
}

const std::vector<SymInvFixture>& syminv_fixtures() {
  static const std::vector<SymInvFixture> rows = {
    {2, {{"1/2", "1/2"}, {"1", "1/2"}}},
    {3, {{"5/12", "1/2", "1/12"}, {"2/3", "1/2", "1/12"}, {"3/4", "1/2", "1/12"}, {"46912496118443/70368744177664", "1/2", "1/12"}, {"58640620148053/140737488355328", "1/2", "1/12"}, {"1", "1/2", "1/12"}}},
    {4, {{"15881834623431/35184372088832", "61572651155457/140737488355328", "5/48", "1/144"}, {"19/36", "140737488355325/281474976710656", "117281240296107/1125899906842624", "1/144"}, {"19791209299969/35184372088832", "123145302310909/281474976710656", "234562480592215/2251799813685248", "1/144"}, {"62549994824587/70368744177664", "70368744177667/140737488355328", "234562480592215/2251799813685248", "1/144"}, {"748278746681/2199023255552", "61572651155453/140737488355328", "5/48", "1/144"}, {"26388279066621/35184372088832", "70368744177665/140737488355328", "117281240296107/1125899906842624", "1/144"}, {"7940917311717/17592186044416", "7/16", "117281240296107/1125899906842624", "1/144"}, {"6841405683939/8796093022208", "35184372088831/70368744177664", "117281240296107/1125899906842624", "1/144"}, {"9/16", "30786325577729/70368744177664", "29320310074027/281474976710656", "1/144"}, {"5619726097523/8796093022208", "35184372088831/70368744177664", "58640620148053/562949953421312", "1/144"}, {"2993114986727/8796093022208", "7/16", "117281240296105/1125899906842624", "1/144"}, {"1", "1/2", "58640620148055/562949953421312", "1/144"}}},
  };
  return rows;
}

const std::vector<GpFixture>& gp_fixtures() {
  static const std::vector<GpFixture> rows = {
    {3, {21, 19}, {"1", "4329327034365/137438953472", "35527969472513/137438953472", "399"}},
    {5, {21, 19}, {"1", "7619/128", "1468423/1024", "4643843/256", "266554253/2048", "2157156441/4096", "575575719967/524288", "3700378042361/4194304"}},
    {3, {21, 9, 6}, {"1", "3092376453119/137438953472", "40819369181185/274877906944", "270"}},
    {3, {12, 9, 5}, {"1", "11544872091645/1099511627776", "40132174413825/1099511627776", "42"}},
    {3, {21, 9, 6}, {"1048573/1048576", "20971505/524288", "84246529/131072", "5577375771/1048576", "6265700353/262144", "463063744509/8388608", "27396522639355/536870912"}},
    {3, {21, 19, 16}, {"1", "8246337208319/1099511627776", "81363860455425/4398046511104", "15"}},
    {4, {9, 7, 5}, {"67108863/67108864", "587202553/33554432", "4160749567/33554432", "1914699777/4194304", "247765925897/268435456", "4183298146289/4294967296", "7215545057279/17179869184"}},
    {4, {21, 12, 9}, {"524287/524288", "10485755/262144", "171442179/262144", "1462763527/262144", "109509083155/4194304", "132498063359/2097152", "16437913583613/268435456"}},
    {4, {21, 9, 5}, {"262143/262144", "10616825/262144", "86638593/131072", "2926313487/524288", "108129157137/4194304", "129805320191/2097152", "32469952757755/536870912"}},
    {4, {21, 9, 6}, {"1048573/1048576", "20971505/524288", "84246529/131072", "5577375771/1048576", "6265700353/262144", "463063744509/8388608", "27396522639355/536870912"}},
    {4, {31, 19, 5}, {"16383/16384", "65365/1024", "3423915/2048", "46973953/2048", "22705493343/131072", "1424674346311/2097152", "35969680015355/33554432"}},
  };
  return rows;
}

}  // namespace satip::cli
