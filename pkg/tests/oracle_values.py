"""Frozen oracle values; regenerate with tests/oracles/generate.py."""

# fmt: off
EULER = '0.5772156649015328606065121'
STIELTJES_0 = '0.5772156649015328606065121'
STIELTJES_1 = '-0.07281584548367672486058638'
STIELTJES_2 = '-0.009690363192872318484530386'
STIELTJES_3 = '0.002053834420303345866160047'
ZETA_2 = '1.644934066848226436472415'
ZETA_3 = '1.202056903159594285399738'
ZETA_4 = '1.082323233711138191516004'
ZETA_5 = '1.036927755143369926331365'
ZETA_6 = '1.017343061984449139714518'
DZETA_2 = '-0.9375482543158437537025741'
DZETA_3 = '-0.1981262428856368533306818'
ZETA_1_5 = '2.612375348685488343348568'
ZETA_MINUS_0_5 = '-0.2078862249773545660173067'
DZETA_MINUS_0_5 = '-0.3608543395999476073474208'
E1_AT_1 = '0.2193839343955202736771638'
PSI_3_5 = '1.10315664064524318722569'
SIGMA_1 = '1.2577468869443696300099'
SIGMA_2 = '0.8632068016894392377940319'
SIGMA_3 = '0.7612801797083721299071383'
SIGMA_4 = '0.7234523304164045701788142'
SIGMA_5 = '0.7073136907360199328052188'
SIGMA_6 = '0.6999486450457684021899873'
GAMMA_H0_0 = '0.5772156649015328607096411'
GAMMA_H0_1 = '-0.07281584548367672440292606'
GAMMA_H0_2 = '-0.009690363192872316546616348'
GAMMA_H1_0 = '0.9890559953279725553712988'
GAMMA_H1_1 = '0.40076122995742518618683'
GAMMA_H1_2 = '0.9713046609668004940300683'
GAMMA_H2_0 = '2.815954136745628265570966'
GAMMA_H2_1 = '3.097443041731301111843317'
GAMMA_H2_2 = '8.243912464426398383812146'
GAMMA_H3_0 = '2.964523417045259182237129'
GAMMA_H3_1 = '3.405084797164564473177953'
GAMMA_H3_2 = '9.443710823112576598854579'
GAMMA_STAR_H1_0 = '0.5290529699404390240481971'
GAMMA_STAR_H1_1 = '-0.07885055659688039587221744'
GAMMA_STAR_H2_0 = '0.555196055352811742751258'
GAMMA_STAR_H2_1 = '-0.07540416131052534694711425'
KERNEL_E_1 = '-0.5399969746124664686768983'
KERNEL_E_2 = '-0.2764606088962498691099061'
KERNEL_E_3 = '-0.1864135215298823104019943'
ZH_1_2_5 = '1.643352519221716204082987'
ZH_2_2_5 = '5.054278839343372075989075'
ZH_2_3 = '2.112083781609884873717727'
ZH_3_4 = '1.62862020241512937118321'
ZH_SHIFTED_2_1 = '3.049047873167415007265896'
ZH_SHIFTED_3_2 = '2.28732181331803112190346'
ZH_SHIFTED_4_2 = '2.011193461954282832352766'
C_1_1 = '-0.7885305659115089610491183'
C_2_1 = '-1.043739434006341473472373'
C_2_2 = '0.661274528097699383994536'
# fmt: on
