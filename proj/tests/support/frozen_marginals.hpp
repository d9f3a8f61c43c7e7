// Copyright 2026 The lgmr Authors
//
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


#pragma once

// Three-time, three-outcome two-time marginals for the pairs (1,2), (2,3),
// (1,3), row-major in (n_i, n_j), with the joint-feasibility verdict of an
// independent LP solver (HiGHS). States are partially depolarized random
// mixed states, so several cases sit close to the feasibility boundary.

namespace frozen {

struct MarginalCase {
  double tables[3][9];
  bool feasible;
};

inline constexpr MarginalCase kCases[] = {
    {{{0.24958509598093742, 0.013932036337889742, 0.047077265273404119, 0.0090442967374659115, 0.33376056143244881, 0.014779337356197028, 0.013855466241624967, 0.013301804892135421, 0.30466413574789664}, {0.16225348253184235, 0.027161448324082592, 0.083069928104103297, 0.12755238732733806, 0.22330671743509528, 0.010135297900040717, 0.20468329774298777, 0.024684785273793211, 0.137152655360717}, {0.289298572591276, 0.0073853765285149678, 0.013910448472440369, 0.087626859815276167, 0.26954085219860563, 0.00041648351222995685, 0.11756373519561604, -0.0017732776941495366, 0.21603094938019066}}, false},
    {{{0.0031289423587552339, 0.21325931108891108, 0.002771639842011041, 0.24628046295581005, 0.075108265779908021, 0.025645882742586962, 0.05423595681350829, 0.046617257676662791, 0.33295228074184635}, {0.03997672608523168, 0.2469130157311995, 0.016755620311642246, 0.25119134151198619, 0.085928295204718369, -0.0021348021712228327, 0.052649808403270659, 0.026067162160584124, 0.28265283276258951}, {0.12475585199505539, 0.044932237915899995, 0.049471803378721806, 0.035482578993293795, 0.30336810921227902, 0.0081839232727320098, 0.18357944501213941, 0.010608125968322888, 0.23961792425155529}}, false},
    {{{0.11917981685390579, 0.065667011192776598, 0.18488599484836266, 0.19238396141322708, 0.10686437867613248, 0.0008747987156181268, 0.021376689540362318, 0.13654806301212608, 0.17221928574748888}, {0.06942333563290265, 0.16507092109667912, 0.098446211077913348, 0.063631900064971492, 0.035461477798712018, 0.20998607501735173, 0.10632947134043158, 0.095677097678396744, 0.15597351029264134}, {0.033637932861389525, 0.27660673719612783, 0.059488152837527862, 0.1803699616234635, 0.024013933855808217, 0.095739243325705908, 0.025376812553452692, -0.0044111744781482332, 0.30917840022467274}}, false},
    {{{0.30370244531246926, 0.042177560823793252, 0.031773982521349664, 0.01744162480942197, 0.32247943357845177, -0.00064313569996598055, 0.012492060148927397, 0.022433262852064373, 0.24814276565348847}, {0.023825598564046035, 0.3102995203321135, -0.000488988625340964, 0.065995106329955838, 0.017575232644575861, 0.30351991827977776, 0.17230718124646607, -0.0038927572550066097, 0.11085918848341261}, {0.052334649130673011, 0.28997855901341324, 0.035340780513525877, 0.085461622449955588, 0.0094462204359802016, 0.24437007980197203, 0.12433161455983938, 0.024557216272289309, 0.13417925782235157}}, false},
    {{{0.30787021674773707, 0.0054132245513914268, 0.03393982633520036, 0.027549311524759465, 0.2683051116009792, 0.0073320052657396871, 0.053161455304965334, -0.00010962004179603663, 0.29653846871102352}, {0.39033398392595986, -0.0010436640476708698, -0.00070933630082722562, 0.0020329235825389362, 0.27062048513578912, 0.00095530739224644915, 0.0033194071210205824, -0.00072880353512276, 0.33521969672606577}, {0.29123718971961909, 0.0082166359201709133, 0.047769441994538898, 0.035543435259829101, 0.25920098606897063, 0.0084420070626786432, 0.068905689650071267, 0.0014303955638540339, 0.27925421876026746}}, false},
    {{{0.26926361314580038, 0.00079090727571144671, 0.033398719417263446, 0.016385037583118801, 0.38903775357290665, 0.0056855131999548284, 0.023984300241182484, 0.0013127493599395315, 0.26014140620412241}, {0.30355565919586003, -0.0019229238361568517, 0.008000215610398544, 0.0061554291106253193, 0.38228283535062296, 0.0027031457473092263, 0.0064224797866103515, -0.0011147682252410588, 0.29391792725997135}, {0.23129733401456587, 0.0037438867878252574, 0.068412019036384122, 0.033521061007008586, 0.36903246929937661, 0.0085547740495950843, 0.051315173071521197, 0.0064687872020233062, 0.22765449553169992}}, false},
    {{{0.23880676206357626, 0.020746930627005347, 0.0125650925815936, 0.0071358903004490777, 0.050587822015820794, 0.34226915172148259, 0.06321162280583352, 0.21575982559252596, 0.04891690229171293}, {0.20501144093115889, 0.095932912802176362, 0.0082099214365235779, 0.0030978066576803865, 0.054530077192371781, 0.22946669438529982, 0.081261092156019121, 0.25193975149215264, 0.070550302946617224}, {0.1554378515053369, 0.072870334214736682, 0.043810599552101634, 0.088803649870339174, 0.30892456060732987, 0.0022646535600834902, 0.04512883836918237, 0.020607846664634475, 0.26215166565625553}}, false},
    {{{0.10528612919156358, 0.091126213929061339, 0.15825584067509182, 0.13333412567943573, 0.085631350842098802, 0.080646918330525022, 0.045124432037499135, 0.22246508680742724, 0.078129902507297247}, {0.086964369139116149, 0.050168885386650708, 0.14661143238273164, 0.21320148614233658, 0.073107432208549455, 0.11291373322770157, 0.033525905136601961, 0.17121388098048307, 0.11229287539582919}, {0.089146983362992011, 0.080600928803704758, 0.18492027162902006, 0.070779652541831301, 0.085505218663670848, 0.14332752364655754, 0.17376512451323137, 0.12838405110830764, 0.043570245730684805}}, true},
    {{{0.23932689799261947, 0.028250076681774157, 0.051493240635325135, 0.0057145588854735216, 0.21464054639243446, 0.14055769578940469, 0.0092735997165467928, 0.11098079585079162, 0.19976258805563013}, {0.17737986629224864, 0.025371143568511237, 0.051564046733879869, 0.031740630333166125, 0.15740389336468014, 0.16472689522715378, 0.02276111009379448, 0.18567849260059927, 0.18337392178596634}, {0.096943734561790909, 0.084911877047059714, 0.13721460370086813, 0.12000553840893499, 0.011958265492165214, 0.22894899716621239, 0.014932333748483356, 0.27158338699456575, 0.033501262879919572}}, false},
    {{{0.088071403782975746, 0.059670137887317259, 0.16317522837478549, 0.12051700042089637, 0.074227824980078738, 0.10273505205956833, 0.049540051057442955, 0.14796000623123795, 0.19410329520569708}, {0.14382322696579553, 0.045197593376858185, 0.069107634918661356, 0.080458321316074291, 0.13802595646450588, 0.063373691318053788, 0.064639992405286714, 0.14697487067938309, 0.24839871255538121}, {0.031272296752631094, 0.082676927282853696, 0.19696754600959374, 0.24895416016866084, 0.024467753785404139, 0.024057963506478507, 0.0086950837658646661, 0.22305373945248938, 0.15985452927602412}}, true},
    {{{0.17280922956793882, 0.051309564704667271, 0.069960047743392206, 0.072124674403251682, 0.21724435957854499, 0.022944255780691675, 0.19538215361443806, 0.044124525682013985, 0.15410118892506131}, {0.018583301446833338, 0.22198165903654338, 0.19975109710225175, 0.047742608153335211, 0.04073999248202731, 0.22419584932986364, 0.20120746278131924, 0.043609934458478647, 0.0021880952093472628}, {0.10919455450328927, 0.16714889896414131, 0.017735388548567599, 0.015655833266944235, 0.013576064395180699, 0.28308139210036332, 0.14268298461125428, 0.12560662261772726, 0.12531826099253174}}, true},
    {{{0.1279220985692037, 0.080277048251538807, 0.1487937618578293, 0.064283671670479048, 0.24533236927625873, 0.013178624407527428, 0.13023978651491697, 0.01242945664565951, 0.17754318280658654}, {0.21847473742813689, 0.091434117009733751, 0.012536702316729152, 0.066554683520200913, 0.066743590062069078, 0.20474060059118737, 0.060230581675504886, 0.16804430710134796, 0.11124068029509082}, {0.17377839691082539, 0.043446587110150051, 0.13976792465759641, 0.13997789918603673, 0.037446770328176331, 0.14536999584005234, 0.031503706526980563, 0.24532865673482424, 0.04338006270535856}}, true},
    {{{0.029947250007683068, 0.23057838588089336, 0.077435545512170675, 0.15578779672505053, 0.012563744276713598, 0.17089331793496432, 0.13599796757342764, 0.084776513797382477, 0.10201947829171457}, {0.20308738011383423, 0.11352001231457823, 0.0051256218777487716, 0.089939818066654922, 0.14498139181723782, 0.092997434071096702, 0.030162084105435364, 0.072999763597666079, 0.24718649403574816}, {0.049484369180878195, 0.12637595536748622, 0.1621008568523826, 0.12697461023849696, 0.08627420943732865, 0.1259960392609028, 0.1467303028665492, 0.11885100292466723, 0.057212653871308243}}, true},
    {{{0.025754400235141722, 0.17127915524795012, 0.12233752338172953, 0.09550847466048748, 0.13285034859775624, 0.1574353655004849, 0.13350165593562399, 0.11298880739138804, 0.048344269049437838}, {0.035901037919227927, 0.12375647724506801, 0.095107015666957201, 0.21799559305398869, 0.00032859488523742045, 0.19879412329786814, 0.17743706891087585, 0.10144138501500001, 0.049238704005776304}, {0.14009434110113594, 0.018969416631898661, 0.16030732113178681, 0.10597065156343374, 0.17468678542422783, 0.10513675177106674, 0.18526870721952293, 0.031870255089178914, 0.077695770067748152}}, true},
    {{{0.29963420723643119, 0.010395316105063931, 0.034484722843819579, 0.014132635626538232, 0.31129732365342822, 0.0078892565147607296, 0.031773790843943696, 0.0063883387178630289, 0.28400440845815139}, {0.043803556370393959, 0.066988491036827885, 0.23474858629969134, 0.026653381259415611, 0.25614054324894359, 0.045287053967995775, 0.24934319551887513, 0.016302762270147445, 0.060732430027709144}, {0.03792841540701513, 0.049808475325250762, 0.25677735545304886, 0.020269216083321891, 0.27384838017117824, 0.039201619540226877, 0.2616025016583477, 0.015774941059489934, 0.04478909530212058}}, true},
    {{{0.01481247952238436, 0.23104621983541751, 0.025880693273285578, 0.17327977651298429, 0.10702850676235959, 0.12139928698515315, 0.14691335832886843, 0.0031807106941233038, 0.17645896808542394}, {0.083130079128682477, 0.14917024744511267, 0.10270528779044177, 0.067220227321724932, 0.18469544925409609, 0.089339760716079311, 0.15715116599833487, 0.0076035676058523278, 0.15898421473967542}, {0.050658125300474949, 0.11502140619580487, 0.1060598611348075, 0.23539232312139977, 0.13462995156890073, 0.031685295570196413, 0.021451024026867542, 0.091817906540355515, 0.21328410654119262}}, true},
};

// LG2 on every pair and (+,+,+) LG3 hold here, yet no joint exists; the
// (+,-,+) flip class is violated by about 0.243.
inline constexpr MarginalCase kFlipOnly{
    {{0.25497288928076012, 0.072266668692717001, 0.14406444506553462, 0.0083449644216181951,
       0.087158642944890924, 0.23857283696505655, 0.057571846198504584, 0.057647586545851975,
       0.079400119885066539},
      {0.15292841426026724, 0.093567646654640069, 0.074393638985975646, 0.0033891978863598848,
       0.12878229796622473, 0.084901402330875231, 0.091518506684332451, 0.1898722950467524,
       0.18064660018457296},
      {0.026231718932599596, 0.31819490580690035, 0.12687737829951182, 0.094314763997007639,
       0.06090290763155698, 0.17885877270300105, 0.12728963590135223, 0.03312442622915987,
       0.034205490498910918}},
    false};

}  // namespace frozen
