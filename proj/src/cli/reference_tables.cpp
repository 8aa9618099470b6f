#include "oscint/cli/reference_tables.hpp"

#include <array>
#include <stdexcept>

namespace oscint::ref {

namespace {

constexpr InfinityRow kInfinity[] = {
    {"1", "x+x^3", 0.41494101283606350, 0.53411593027204143},
    {"x", "x+x^3", -0.02016219157077424, 0.30316529215034456},
    {"1", "x-x^3", 1.11098231192364267, -0.03858690498389667},
    {"x", "x-x^3", 0.59330541726382226, -0.22202080248217837},
    {"1", "x^2+x^3", 0.54028350983057729, 0.40844024533897794},
    {"x", "x^2+x^3", 0.07962821700232091, 0.26244025603540361},
    {"1", "x^2-x^3", 1.25860675774543236, -0.27494486339726367},
    {"x", "x^2-x^3", 0.73476055145142588, -0.44097066691842955},
    {"1", "-x^2+x^3", 1.25860675774543236, 0.27494486339726367},
    {"x", "-x^2+x^3", 0.73476055145142588, 0.44097066691842955},
    {"1", "-x^2-x^3", 0.54028350983057729, -0.40844024533897794},
    {"x", "-x^2-x^3", 0.07962821700232091, -0.26244025603540361},
    {"1", "x+x^4", 0.50249679573307246, 0.52601826686302930},
    {"x", "x+x^4", 0.05824661765885730, 0.32482243282841976},
    {"x^2", "x+x^4", -0.07182498024997954, 0.20623764810943091},
    {"1", "x-x^4", 1.04843033186615915, 0.09812564203676180},
    {"x", "x-x^4", 0.55603788569756914, -0.06487860797927502},
    {"x^2", "x-x^4", 0.37604412360259629, -0.15808966880512279},
    {"1", "x^2+x^4", 0.60419228699943584, 0.38964387635793124},
    {"x^2", "x^2+x^4", -0.00678784821525451, 0.18281575355157232},
    {"1", "x+x^5", 0.56055180704649184, 0.51785573267722635},
    {"x", "x+x^5", 0.11195277049251853, 0.33139696436598476},
    {"x^2", "x+x^5", -0.02225695591532138, 0.22710191687546598},
    {"x^3", "x+x^5", -0.08199028168861113, 0.15444851391776769},
    {"1", "2x+x^3", 0.18186049037842599, 0.46158113697480635},
    {"x", "2x+x^3", -0.10324653677125750, 0.16619667306199227},
    {"1", "x^3+x^4", 0.66346454706590291, 0.32615196348829038},
    {"x", "x^3+x^4", 0.18566011304028281, 0.23801625874900127},
    {"x^2", "x^3+x^4", 0.03767486947451176, 0.17284523624119006},
    {"1", "x^2+x^5", 0.64955004591503774, 0.37714240719158655},
    {"x", "x^2+x^5", 0.17628609937611991, 0.26821665359731032},
    {"x^2", "x^2+x^5", 0.02993102573558424, 0.19494632498226022},
    {"x^3", "x^2+x^5", -0.03639133933981598, 0.13909435860476519},
    {"1", "x+x^6", 0.60171369622318495, 0.51091411953631571},
    {"x", "x+x^6", 0.15052717690553594, 0.33274431831757486},
    {"x^2", "x+x^6", 0.01428216038702631, 0.23635267804532455},
    {"x^3", "x+x^6", -0.04777162399115301, 0.17190364078803073},
    {"x^4", "x+x^6", -0.08125607922853098, 0.12268865661476232},
    {"1", "x+x^2+x^3", 0.31281238144992430, 0.42522475067652506},
    {"x", "x+x^2+x^3", -0.03063713609272196, 0.18754944674648485},
    {"1", "2x+x^4", 0.22758105958079916, 0.50285846929935148},
    {"x", "2x+x^4", -0.08301824875147187, 0.21632137918922486},
    {"x^2", "2x+x^4", -0.12503111830114265, 0.07854722450324651},
};

constexpr NeumannRow kNeumann[] = {
    {3, 0, "4/27", ".14814814814814814814814815"},
    {3, 1, "136/729", ".18655692729766803840877915"},
    {3, 2, "1120/6561", ".17070568510897729004724889"},
    {3, 3, "31912/177147", ".18014417404754243650753329"},
    {3, 4, "2491372/14348907", ".17362799828586247022159946"},
    {3, 5, "23052640/129140163", ".17850867975131795365629204"},
    {3, 6, "608995904/3486784401", ".17465831951793224739736353"},
    {3, 7, "16739336224/94143178827", ".17780721272181224941292368"},
    {3, 8, "148413541000/847288609443", ".17516291302153317339294102"},
    {3, 9, "12177019210000/68630377364883", ".17742899977453386676382033"},
    {3, 10, "325122763152640/1853020188851841", ".17545559681899144476569162"},
    {4, 0, "1/8", ".12500000000000000000000000"},
    {4, 1, "11/64", ".17187500000000000000000000"},
    {4, 2, "159/1024", ".15527343750000000000000000"},
    {4, 3, "1347/8192", ".16442871093750000000000000"},
    {4, 4, "41531/262144", ".15842819213867187500000000"},
    {4, 5, "341309/2097152", ".16274881362915039062500000"},
    {4, 6, "5350155/33554432", ".15944704413414001464843750"},
    {4, 7, "43506995/268435456", ".16207618638873100280761719"},
    {4, 8, "2747379155/17179869184", ".15991851425496861338615417"},
    {4, 9, "22228087705/137438953472", ".16173062398593174293637276"},
    {4, 10, "352241109985/2199023255552", ".16018071163898639497347176"},
    {5, 0, "2/25", ".080000000000000000000000000"},
    {5, 1, "72/625", ".11520000000000000000000000"},
    {5, 2, "8118/78125", ".10391040000000000000000000"},
    {5, 3, "214544/1953125", ".10984652800000000000000000"},
    {5, 4, "5179592/48828125", ".10607804416000000000000000"},
    {5, 5, "663616816/6103515625", ".10872697913344000000000000"},
    {5, 6, "16287458776/152587890625", ".10674148983439360000000000"},
    {5, 7, "2065603429328/19073486328125", ".10829710907555184640000000"},
    {5, 8, "51039744111764/476837158203125", ".10703810144347409612800000"},
    {5, 9, "1288445436120032/11920928955078125", ".10808263692999989395456000"},
    {5, 10, "159738815063405788/1490116119384765625", ".10719890415611250403704832"},
};

constexpr std::array<long, 4> kKappa = {1, 5, 66, 1122};
constexpr std::array<long, 4> kLambda = {1, 10, 154, 2805};
constexpr std::array<long, 8> kEta = {1, 3, 14, 77, 462, 2926, 19228, 129789};

}  // namespace

std::span<const InfinityRow> infinity_rows() { return kInfinity; }
std::span<const NeumannRow> neumann_rows() { return kNeumann; }

double neumann_prefactor_reference(int n) {
  switch (n) {
    case 3: return 5.062876576879227;
    case 4: return 4.31160109908185588987751;
    case 5: return 5.27349462002150700879064;
    default: throw std::invalid_argument("no reference prefactor for this n");
  }
}

double complete_sine_reference(int n) {
  switch (n) {
    case 2: return 0.626657068657750125603941;
    case 3: return 0.446489755784624605609282;
    case 4: return 0.346865211023809496042035;
    default: throw std::invalid_argument("no reference complete integral for this n");
  }
}

std::span<const long> kappa_reference() { return kKappa; }
std::span<const long> lambda_reference() { return kLambda; }
std::span<const long> eta_reference() { return kEta; }

}  // namespace oscint::ref
