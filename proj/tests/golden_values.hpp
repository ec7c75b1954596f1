// Generated by tests/oracle/closed_form_oracle.py (mpmath, 60 digits). Do not edit.
#pragma once

#include <array>

namespace gowsn::golden {

struct ClosedFormCase {
    long n_nodes;
    double range_m;
    double side_m;
    long n;
    const char* density;
    const char* p_connect;
    const char* p_r;
    const char* binomial;
    const char* poisson;
};

inline constexpr std::array<ClosedFormCase, 60> kClosedFormCases{{
    {1756, 32.941355692749404, 395.86647224745303, 4, "3.819969359509360924062132e+1", "9.999999999999548551335273e-1", "2.175381184230843265999546e-2", "1.660690294289889281430566e-12", "2.325788048465888557646785e-12"},
    {1770, 57.048443351343906, 239.51958716747478, 50, "3.154486457496707444114726e+2", "1.0", "1.782195738698704701486242e-1", "4.099287902997971784177367e-87", "3.395317746845118467329804e-77"},
    {238, 92.00407577866876, 419.81745083620166, 39, "3.591037904811838184373385e+1", "9.999999999999396193903893e-1", "1.508839455803293268975837e-1", "5.890424116728324284895165e-2", "5.527481227933668633489196e-2"},
    {560, 35.096145589719065, 142.930987748252, 59, "1.060727811077369548982249e+2", "1.0", "1.894156805495302732697608e-1", "2.206238960084590572003685e-8", "2.178971396935953532987259e-7"},
    {382, 47.39112854918161, 371.19689538363315, 3, "1.956134293991387637080439e+1", "9.999987791008227490477286e-1", "5.120770403118815831644709e-2", "2.883347636384469059375457e-6", "4.16375833174350242618662e-6"},
    {492, 14.172414529074818, 435.0049071227885, 40, "1.640644006568417654504492", "9.020593660998284608198068e-47", "3.334642289773206602255081e-3", "1.950503790951157632143519e-41", "8.760125692267321751952951e-41"},
    {229, 11.240767042735008, 56.4716467451092, 14, "2.850469152961082591706467e+1", "9.999999999044115889077956e-1", "1.244746355004839620564478e-1", "7.42091549814672700738644e-4", "1.192449507245297073391833e-3"},
    {1244, 20.611581095915447, 381.3104587268321, 35, "1.141919352050274371194307e+1", "9.86430412804169733382799e-1", "9.179416013265871239420336e-3", "8.768583368797365462318242e-9", "1.085119410442000099556336e-8"},
    {1028, 9.353866835146713, 50.1887197988261, 43, "1.121794011195885588755477e+2", "1.0", "1.091239310501834178430866e-1", "3.801209342676818400877774e-15", "4.736303706229577460347805e-14"},
    {1856, 0.5301303562732932, 349.72515041297095, 4, "1.339798416755949058606544e-2", "2.463432626350671584879435e-3482", "7.218741469590242789289159e-6", "1.317655080663857224524545e-9", "1.321888523256572782891069e-9"},
    {1141, 3.368862884309772, 69.120068629885, 5, "8.515180652149352093420418", "7.955809798114946769106142e-1", "7.462910299867968257032013e-3", "7.475233050612959971540228e-2", "7.499447170378214802645028e-2"},
    {1283, 3.6822567821220034, 299.8347661114985, 52, "6.079119687944587455826171e-1", "7.194482459719551217285417e-439", "4.738207083355095822763035e-4", "1.339532967611050382690494e-80", "3.729510540712375892649287e-80"},
    {67, 43.676051314711636, 181.8582160986566, 7, "1.214075114451438983459147e+1", "9.996424497542395575050435e-1", "1.812052409629013297285011e-1", "3.766548213870969782307402e-2", "4.442296091366366871088731e-2"},
    {1849, 22.98848453926493, 161.3279501103583, 5, "1.179473635236053864629105e+2", "1.0", "6.378981261417273500177876e-2", "3.287308803012504403699358e-45", "1.207534786232921273392468e-43"},
    {1452, 50.904530406340584, 391.2107591379317, 57, "7.723386688695877967824851e+1", "1.0", "5.319136837944819951402891e-2", "2.545341458582619132566232e-3", "2.891370301237767174184525e-3"},
    {1535, 31.929525485068705, 247.30399068978826, 55, "8.038609504529553391615244e+1", "1.0", "5.236879156045311847322331e-2", "4.895749215384831537531473e-4", "5.987016131069165969236494e-4"},
    {1964, 11.601261477989329, 226.72012157130746, 47, "1.615554656151619660131947e+1", "9.998108372142389935617017e-1", "8.225838371444092514072092e-3", "1.794269455828149214382825e-10", "2.266534426916892080334624e-10"},
    {1470, 68.11800833577328, 474.76095138759234, 52, "9.506947755158176443038997e+1", "1.0", "6.467311398066786704584751e-2", "2.480868786219005138181657e-7", "4.743062406616650873730833e-7"},
    {411, 28.276773660764842, 114.81106304980298, 8, "7.832202894723409107845914e+1", "1.0", "1.905645473168712688422723e-1", "3.9491068832309781548444e-27", "4.027386767401079856547139e-24"},
    {1074, 8.050385333959609, 76.65556540171139, 12, "3.721346489416147809683834e+1", "9.999999999999259710098095e-1", "3.464940865378163490578937e-2", "7.713586528281686601267663e-7", "1.039094905676363799567113e-6"},
    {79, 42.35608928474488, 449.3498158737015, 45, "2.205157115779782791817739", "9.836019309685889612723454e-5", "2.791338121240231415902357e-2", "4.935566898336916582643727e-49", "1.52209032323160064436311e-42"},
    {916, 3.855232093853728, 117.93113030844859, 37, "3.075314115835037974835551", "1.560556619017203711870052e-19", "3.357329820780609129668876e-3", "1.962836829689962205004025e-27", "3.643242023323106756716616e-27"},
    {158, 18.83827104177967, 318.5435494386919, 9, "1.736006760182273329287897", "4.9882920490190065237981e-14", "1.098738455811565470283661e-2", "5.752055805539375596388688e-5", "6.640738341129542455774289e-5"},
    {388, 5.711721634995559, 262.8946314272208, 43, "5.753766463812518402369069e-1", "5.03726353855265157015621e-140", "1.482929500982607836386116e-3", "3.752027514303633409008575e-65", "3.975279466694259113007036e-64"},
    {737, 16.34503720021591, 293.10740597473523, 32, "7.200051508730976658424313", "5.767128024399402231294094e-1", "9.76940503219942573997061e-3", "4.978951674795525355322989e-12", "7.464456074884588150182339e-12"},
    {820, 25.299697164234473, 104.58624693133679, 29, "1.507457973369275297196839e+2", "1.0", "1.838363382157652942744265e-1", "1.965178836864840225679045e-38", "6.591358737718973775479653e-34"},
    {914, 15.422212404459733, 110.18851927219741, 41, "5.624924983124232949006012e+1", "9.999999999999999999996594e-1", "6.154184883068088946328047e-2", "5.763840635816871911415945e-3", "6.439520501334124982216502e-3"},
    {780, 49.31444337578693, 245.35522760657807, 4, "9.89924596320573856085161e+1", "1.0", "1.269134097846889504568148e-1", "8.242140047824640903230215e-40", "4.604764924455743492923601e-37"},
    {46, 8.1181853566092, 130.77265349154166, 32, "5.56918645671544256656622e-1", "1.002300661502078333695283e-17", "1.210692707981618043371763e-2", "2.829271814221795377303482e-51", "8.000288044695869699752471e-45"},
    {1855, 24.019778168046315, 295.43813426742184, 8, "3.852109882651685011332716e+1", "9.999999999999654185454246e-1", "2.076609101159938117707411e-2", "1.770120743100426437943431e-9", "2.27883709909350168676967e-9"},
    {1950, 14.655791579511076, 149.81740711012424, 31, "5.86244108980748356240606e+1", "9.999999999999999999999324e-1", "3.006380046055119868576734e-2", "2.278986118718993821944851e-5", "2.762510369836584579399612e-5"},
    {1580, 37.25917150943779, 277.32425354521746, 26, "8.959786100228040953044532e+1", "1.0", "5.670750696346861607117245e-2", "4.818609611804274345206368e-16", "1.818619784973383552528531e-15"},
    {775, 15.729793798605082, 262.2518497155608, 22, "8.759120764539933016987297", "8.854121145106481837360857e-1", "1.130209130908378404106175e-2", "6.730311670676646085461879e-5", "7.445588322863502329620496e-5"},
    {220, 16.23239621075029, 282.8573433624718, 8, "2.276160627276506801163827", "4.453123238463855388043528e-11", "1.034618466943866673772288e-2", "1.68686400440693603871701e-3", "1.787489473343502945376757e-3"},
    {212, 8.552212751037054, 224.71698237402705, 50, "9.646525959916263787380289e-1", "6.625594804613709859598301e-45", "4.550248094300124139085156e-3", "3.701485712307656735898549e-69", "1.643745447636577047710089e-66"},
    {1998, 2.9457714372620334, 314.12253219230536, 56, "5.520078717074439071391772e-1", "7.970108878191771427710868e-745", "2.762802160697917485429587e-4", "1.299895837098128669658773e-90", "2.787898639533426790146852e-90"},
    {1819, 46.064812553174434, 304.944997007511, 25, "1.304001716442546979387651e+2", "1.0", "7.168783487864469233260088e-2", "4.88387836028666223177236e-31", "1.21449726135755214992404e-29"},
    {340, 28.229559738315245, 152.79110294528274, 16, "3.646203200768274240442079e+1", "9.999999999999503156494704e-1", "1.072412706108316021952148e-1", "3.796227552522201481072786e-5", "7.239053469712712148614219e-5"},
    {1269, 19.754801108407204, 203.3210084901, 48, "3.763503355242520663504549e+1", "9.999999999999426181925218e-1", "2.965723684194263539856583e-2", "1.49808530031155044672909e-2", "1.53560974799157600849968e-2"},
    {1141, 46.78983413611476, 485.1036461967403, 12, "3.334797372120338216781898e+1", "9.999999999962464286582199e-1", "2.922697083365765344014349e-2", "1.085091400088304700039348e-5", "1.323667995821690989922918e-5"},
    {117, 42.000147398343714, 296.24393645345117, 39, "7.388196262528639052229267", "9.301698022620057304332407e-1", "6.314697660280887775166924e-2", "1.234665159968272212973598e-18", "1.72503508840749375513551e-16"},
    {650, 23.735384151607267, 319.1592625870032, 43, "1.129381978728971451389864e+1", "9.919403457901928678810618e-1", "1.7375107365061099684357e-2", "1.703478674479067317266693e-13", "3.672484382062985916185103e-13"},
    {1075, 34.04978624407919, 174.14708398182174, 29, "1.291084606564081213106629e+2", "1.0", "1.201008936338680163930728e-1", "1.062027920355944941319864e-28", "1.739776225298862047965566e-26"},
    {1412, 23.098678862534662, 447.1973281960661, 53, "1.183478713656934761090451e+1", "9.898180000250461958501719e-1", "8.381577292187922772740899e-3", "6.866308733713371832699012e-19", "1.242023375174316852401217e-18"},
    {260, 29.99219362068842, 131.86512368502162, 44, "4.225516383593819690136261e+1", "9.999999999999998841785862e-1", "1.62519860907454605348006e-1", "6.260658486223905464254021e-2", "5.752686557376368763543411e-2"},
    {1205, 78.08805635349725, 484.58620437388123, 3, "9.830238477533159614534582e+1", "1.0", "8.157874255214240623166217e-2", "6.46741771798740364668598e-40", "3.481009133718900099807313e-38"},
    {309, 31.232026216137918, 455.1688692245631, 19, "4.570498498133463013407857", "4.012767582974677447956586e-2", "1.479125727551282597601046e-2", "2.046614727803159269406146e-7", "2.811559042998518951972898e-7"},
    {921, 7.0746954327076175, 49.7038564341735, 1, "5.861986673248866630821119e+1", "9.999999999999999999999679e-1", "6.364806377034600551859553e-2", "3.312209198193323317143837e-25", "2.172352884662172751435429e-24"},
    {1669, 16.57404442881564, 441.4103241770993, 53, "7.392277020035626275496592", "3.575761348883997298338232e-1", "4.429165380488691860805517e-3", "8.403526385273702319965529e-28", "1.556055778702091436733942e-27"},
    {1053, 70.64554188590559, 418.2829068492408, 60, "9.436425822753452296359945e+1", "1.0", "8.961468017809546786267839e-2", "2.239129907981225958718838e-5", "3.986223226667129873167518e-5"},
    {100, 7.0, 100.0, 2, "1.539380400258998686846695", "3.264723273511083269488792e-11", "1.539380400258998686846695e-2", "2.552653852732823956287296e-1", "2.529725099254028391570419e-1"},
    {200, 7.0, 100.0, 3, "3.078760800517997373693391", "8.094609486205405772928107e-5", "1.539380400258998686846695e-2", "2.255972096586410662643708e-1", "2.238939995064421654297573e-1"},
    {300, 7.0, 100.0, 5, "4.618141200776996060540086", "5.09938106400203391520158e-2", "1.539380400258998686846695e-2", "1.739803022258219465930488e-1", "1.725665684863721822528907e-1"},
    {400, 7.0, 100.0, 6, "6.157521601035994747386781", "4.283151883674371766959397e-1", "1.539380400258998686846695e-2", "1.615719655808896549481505e-1", "1.603571705379600112998789e-1"},
    {500, 7.0, 100.0, 8, "7.696902001294993434233476", "7.967871455423274764040982e-1", "1.539380400258998686846695e-2", "1.397907207060161243379275e-1", "1.386803217394380131081947e-1"},
    {600, 7.0, 100.0, 9, "9.236282401553992121080172", "9.432099855465495078619842e-1", "1.539380400258998686846695e-2", "1.323973914655890292824393e-1", "1.314047023898206122309114e-1"},
    {700, 7.0, 100.0, 11, "1.077566280181299080792687e+1", "9.854749261692713467727438e-1", "1.539380400258998686846695e-2", "1.20004809453796263531331e-1", "1.190620197470190608159771e-1"},
    {800, 7.0, 100.0, 12, "1.231504320207198949477356e+1", "9.964193904011344047101004e-1", "1.539380400258998686846695e-2", "1.148065085027135506223616e-1", "1.139478033569512950106487e-1"},
    {900, 7.0, 100.0, 14, "1.385442360233098818162026e+1", "9.991347232435295431757058e-1", "1.539380400258998686846695e-2", "1.067228982395104167369556e-1", "1.058903524924279321144204e-1"},
    {1000, 7.0, 100.0, 15, "1.539380400258998686846695e+1", "9.997936943564310240995897e-1", "1.539380400258998686846695e-2", "1.027226815734429364956938e-1", "1.019561232008974009104856e-1"},
}};

inline constexpr double kDensityN100 = 1.5393804002589987;
inline constexpr double kDensityN500 = 7.6969020012949934;
inline constexpr double kConnectN100 = 3.2647232735110833e-11;
inline constexpr double kConnectN500 = 0.79678714554232748;
inline constexpr double kPrR7L100 = 0.015393804002589987;
inline constexpr double kBinomialN1000n15 = 0.10272268157344294;
inline constexpr double kShapingN500 = 0.9995387213253562;
inline constexpr double kShapingN700 = 0.99997877368766105;
inline constexpr long kStoppingPaperLiteral = 321;
inline constexpr long kStoppingErrorComplement = 557;
inline constexpr double kFixedLambdaS = 15.378410198587397;
inline constexpr double kTvN50 = 0.091523525304956388;
inline constexpr double kTvN200 = 0.019418877323467082;
inline constexpr double kTvN1000 = 0.0037496433371814296;

}  // namespace gowsn::golden
