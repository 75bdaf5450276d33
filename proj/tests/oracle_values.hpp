#pragma once

// Frozen reference values for the test suites.
//
// The long zero ordinates are the classical published values; entries marked
// "mpmath" were computed independently with the mpmath multiprecision
// library (mp.dps >= 130) and frozen here so the tests never depend on the
// code paths they are checking.

namespace oracle {

// ordinates of the first five zeros, 160 digits (mpmath zetazero)
inline constexpr const char* kZeros160[5] = {
    "14.134725141734693790457251983562470270784257115699243175685567460149963429809256764949010393171561012779202971548797436766142691469882254582505363239447137780413",
    "21.022039638771554992628479593896902777334340524902781754629520403587598586068890799713658514180151419533725473642475891383865068603731321262118821624375741669256",
    "25.010857580145688763213790992562821818659549672557996672496542006745092098441644277840238224558062440750471046149055778378299851522730801188133933582671689587225",
    "30.424876125859513210311897530584091320181560023715440180962146036993329389333277920290584293902089110630991711527395499117633226671186319391807225956714243341156",
    "32.935061587739189690662368964074903488812715603517039009280003440784815608630551005938848496135348724549602525280597581513579237782857754506037653011472682109833",
};

// ordinates of zeros 99996..100000, 160 digits (mpmath zetazero)
inline constexpr const char* kZerosNear1e5[5] = {
    "74918.370580226673842541859986418599466792652288431856598830563958390400392321252669361674175369185848882381102425042884977553890057295311372889697513014698028772",
    "74918.691433453695554552599078786911465611179637659951934974330213766699249024579496911403122481276896757049885004891608667714053129082432510169064950270719286541",
    "74919.075161120770530104257062988308142745091305689965011021402337784460136215541861780281199019505056264512740710618526490083502606007398344481964621203384961859",
    "74920.259793258891436549848857536945281519192460712365999060525099822477308186355513314560461071402136902388791836049488304239187575488072788359405133292380651711",
    "74920.827498994186793849200946918346620223555216801554093490631576126612551577584238907454741837775506529606534448831389987139098875343253272683912697578292786399",
};

// n = 126 and n = 1000, 120 digits (mpmath zetazero); both agree with the
// published values to every printed digit
inline constexpr const char* kZero126 =
    "279.229250927745189228409880451955359283492637405561293594727009371327319291996305078816822578193579268687767896888640542";
inline constexpr const char* kZero1000 =
    "1419.42248094599568646598903807991681923210060106416601630469081468460867641759301041791134329117920998748098423226056012";

// lim_{delta->0+} arg zeta(1/2 + delta + i y_1)  (mpmath, = arg zeta'(rho_1))
inline constexpr double kArgZetaFirstZero = 0.15787391988094121304194545507;

// log Gamma(1/4 + 7.0674 i)  (mpmath loggamma)
inline constexpr double kLogGammaRe = -10.6712236854805695513210603636859631822081082;
inline constexpr double kLogGammaIm = 6.3616240868118409068825746280256655712875789;

// Riemann-Siegel theta at t = 100  (mpmath siegeltheta)
inline constexpr const char* kTheta100 = "87.9721652317872196254831291137486908685665197";

// first Gram point  (mpmath grampoint)
inline constexpr const char* kGram0 = "17.8455995404108608168263384125";

// Li(2) = Ei(log 2)  (mpmath ei)
inline constexpr const char* kLi2 = "1.045163780117492784844588889194613136523";

// Ei(rho_1 log 2)  (mpmath)
inline constexpr double kEiRho1Log2Re = -0.04339890657215447097052132115614903020953;
inline constexpr double kEiRho1Log2Im = 3.277531337620196230259821881557208448646;

// zeta(1/2 + 100 i)  (mpmath)
inline constexpr double kZetaHalf100Re = 2.692619885681324090476096470521590577063;
inline constexpr double kZetaHalf100Im = -0.02038602960259816177072685329832152099173;

}  // namespace oracle
