//! Frozen reference values for the statistics module, computed
//! with scipy (pearsonr, spearmanr, linregress, ttest_ind with
//! equal_var=False, kruskal). Regenerate with
//! tools/gen_stats_fixtures.py.

pub struct ReferenceCase {
    pub xs: &'static [f64],
    pub ys: &'static [f64],
    pub pearson: f64,
    pub spearman: f64,
    pub ols_intercept: f64,
    pub ols_slope: f64,
    pub ols_r_squared: f64,
    pub welch_t: f64,
    pub welch_p: f64,
}

pub const CASES: [ReferenceCase; 20] = [
    ReferenceCase {
        xs: &[-0.26428290210292243, -0.14235568156532605, 0.4779860606030224, 0.13741890951369584, -1.0961391447734812, -0.6580076496229519, 0.10533666780415293, -0.03355155335984646, 0.7082147649885285, 0.4967811840706871, -1.1686483962986711, -0.3252576094783014, -0.5722516784739077, 0.7888601260324118, 0.02765760388223048, 0.047719863311648895, 0.7762336731830615, 0.6582507747105285, 0.035137803866136436, -0.08620754047737261, -1.5416303885962974],
        ys: &[-0.7436614287241365, -0.18238949307856428, 1.0675653106057517, -0.08753790081930152, -2.534876679397958, -0.7677720303018718, 0.18823243952100494, -1.2108575851744117, 1.5152513581126204, 1.0524052946763716, -2.475823794246328, -1.0108624548168819, -0.8273087162756381, 0.5540798631170245, 0.41391009673168644, 0.40642451335990587, 2.2194655832369774, 1.6249649167470919, 0.24701718789222046, -0.5673325495411173, -2.7339142648259145],
        pearson: 0.9400781521816873,
        spearman: 0.9181818181818181,
        ols_intercept: -0.03123218007339379,
        ols_slope: 1.9629616421772405,
        ols_r_squared: 0.8837469322093354,
        welch_t: 0.32250611132312884,
        welch_p: 0.7494057579189033,
    },
    ReferenceCase {
        xs: &[-1.9148904182135935, 0.08654969606109782, -1.0455896377236147, -1.0350534376259324, -2.848125155946137, 1.5447271171255725, 1.481628533440624, -2.073343847308206, -1.6892654732020724, 1.1078121890133381, -0.36109112986236325, -5.373463420511215, 2.4851208878897753, -3.8847104044833207, 0.9769029678597736, -2.096035764105456],
        ys: &[0.8938369960676629, -4.067627265913432, -0.8765163567736847, 1.5666426002944824, 4.819900640217193, -1.0537851015633062, -2.9881038585596835, 1.5970778262559182, -0.20144832152212655, 1.970886694675926, -0.21144809490386984, 5.430693772772978, -2.1840335506414372, 2.692879280336535, -0.9118781156741596, -2.8465987033450295],
        pearson: -0.6873312611537634,
        spearman: -0.6411764705882352,
        ols_intercept: -0.5662522635977058,
        ols_slope: -0.8669078746065272,
        ols_r_squared: 0.4724242625592225,
        welch_t: -1.3217069424632228,
        welch_p: 0.1967713847999485,
    },
    ReferenceCase {
        xs: &[0.9781362065065102, 1.2611701564727475, -2.6141248500703615, -0.7424326952068557, 4.636470904748111, -1.7562943285837018, 4.710492070304939, 2.3140171095687068, -3.931527037872871, 4.262255603326329, -0.525402311276981],
        ys: &[-0.8063341390152505, 3.3267775994407014, 5.528302757582551, 5.876938483826856, 4.683130098950356, 8.989518862300987, 2.4508298410820437, 5.958229292323046, 3.1429027856105507, 4.440466510834457, 5.1284485199673515],
        pearson: -0.24809264215614263,
        spearman: -0.29090909090909095,
        ols_intercept: 4.589488305071324,
        ols_slope: -0.2054241678816643,
        ols_r_squared: 0.06154995909201581,
        welch_t: -3.119360761721336,
        welch_p: 0.005562770241197081,
    },
    ReferenceCase {
        xs: &[-1.0, -1.5, -0.5, 1.5, 0.5, -0.0, 0.5, 1.0, -0.5, -0.5, -0.0, -0.0, -0.5, 0.0, 1.0, 0.0, 0.5, 0.5, 1.5, -0.5, 0.5, -1.0, -0.5, 1.5, -1.5, -0.0, -0.0, -0.5],
        ys: &[-1.0, 0.0, -1.0, 3.0, 2.0, 1.0, 0.0, 1.0, 2.0, -1.0, 2.0, 2.0, 0.0, 0.0, 2.0, 2.0, 2.0, 0.0, 2.0, 0.0, 1.0, 0.0, -1.0, 2.0, 0.0, 1.0, 0.0, 0.0],
        pearson: 0.6569650554093025,
        spearman: 0.6690476639497211,
        ols_intercept: 0.733235438081253,
        ols_slope: 0.9388154674498288,
        ols_r_squared: 0.43160308402894804,
        welch_t: -2.70237224828529,
        welch_p: 0.009470616473203386,
    },
    ReferenceCase {
        xs: &[4.3584872115197815, -0.969849646426969, 2.20948206798014, -0.2258181044496892, -3.322102027230267, -0.44007999077581944, 2.2353709344789725, 0.5184103935248644, 2.1254042430052897, 1.446917993607264, -0.7325319711432879, -0.11024039266863518, 3.1986179715124314, -1.8453337287055318, 2.737256474591577, 0.7965282683518907, 3.0281832287451245, 1.0364043907518223, 0.10682698329032737, -1.3168723981414057, 0.7749832485596124, -0.7968981465689, 0.7752604343873908, -2.5678357072207394, -1.830069696890471, -0.5519129265518309, 0.642202224918415, 2.0107740519316764, -0.0018256542680066185, -0.4750988548175224, -0.7200373691819579, 3.229952254946946, 0.4776683143081588, -1.0187391775128463],
        ys: &[9.661305165145977, -3.0546970502034947, 3.914643884837565, -0.6777426674657844, -6.124638209058053, -1.2231491983838634, 4.5021252559316185, 1.5484961548095595, 3.924544823727413, 3.421991299319279, -1.053699161371318, -1.076087222881765, 4.817248858518177, -3.5155738954222824, 4.79213323498662, 1.5886109055512991, 6.03849648013433, 2.1542830584191845, -0.3005816181757771, -3.3331020364966593, 2.0945033536940443, -2.0300848987319298, 3.3362810649910317, -4.592878927267774, -3.112492631935423, -1.8416650369953964, 1.1711564211103498, 4.6473713348855314, -0.8162376431229768, -0.6279811622549152, -1.70541127890529, 6.22815690844375, 1.4035483350621658, -2.4849337333461348],
        pearson: 0.982899867674634,
        spearman: 0.9862490450725744,
        ols_intercept: -0.04962618514616257,
        ols_slope: 1.9860831641105914,
        ols_r_squared: 0.9660921498748122,
        welch_t: -0.5501464191483096,
        welch_p: 0.5847569192486994,
    },
    ReferenceCase {
        xs: &[-0.13758426700538234, -3.232338832802899, 5.386127168540732, 2.9322153006158107, 1.142712709684105, 2.072065142110311, 5.553903631150641, 2.410217124155931, -0.0015640437677955608, 1.0198419736139115, 6.484699722565252, -3.491532886935677, -4.44891923943856, 2.1340917183569443, -0.7338644460671767, 3.715563669827935, -1.1120148847315583, 5.039708058064948, -1.116073167481521, -2.959823311393947, 1.3012157453443198, -0.6502700509619634, -1.9244786264503444, -5.613528827801318, 1.9967991989022837, 5.235845101556569, -3.76922847427264, -0.6021539511327438, -0.589857505954244, -0.11438594812959767, 4.0365607265190055, 3.7769941608914035, -0.3046541694958701, 1.7954932918940534, 2.1370605180765763, 3.9700716123079367],
        ys: &[0.47480951618465933, 2.94642347304771, -6.601595684167664, -4.67977984484328, -0.7157379936356709, -4.258112902361017, -6.164584959232753, -2.539635956889608, -0.5079267328366261, -0.5958391727667824, -8.204714947698486, 3.7426051151025908, 2.555327078622806, 0.2208700701589743, -2.041822375538692, -3.3184462135271597, 1.6429041139732894, -7.391211572607081, -0.40416964791593046, 0.3004937209531775, -2.3250299401869965, 0.6756646457593833, 3.3273025652171713, 6.438559301461196, -0.6059502524775973, -4.579218513002006, 0.9219924367365793, 0.8704002264177069, 1.1377788448963648, 1.2232044800770945, -2.739448032034196, -4.168428162423969, 1.30934550759596, -1.4888360491732902, -2.9196012101930475, -3.6948895724104402],
        pearson: -0.9160984996311523,
        spearman: -0.9057915057915058,
        ols_intercept: -0.3121932739474611,
        ols_slope: -0.98657984244295,
        ols_r_squared: 0.8392364610264481,
        welch_t: 2.7081940743110318,
        welch_p: 0.008506289754945611,
    },
    ReferenceCase {
        xs: &[-0.049140088418225536, -0.8875645105687153, -0.53864412306984, -0.385138383431759, 1.6229175634279733, -1.2692161168827722, -1.1993057804011635, 0.48784513940299346, 0.7669057096243799, 0.18828893470917668, -1.048144875591313, -0.028398491539575275, -0.5389400531530137, 0.3610241908661621, -1.1794154632432114, -0.7721806204871803, 0.6915900140528194, -0.7610764630712756, -0.18509101276505902, 0.9979328443318157],
        ys: &[2.938651442570778, 8.317814486972534, -0.6460861722944236, -0.08850328814555475, -1.3944243282656057, 5.438749350269478, 4.83977919828723, 0.11153239004490345, 4.032135984528022, 6.5868846480299865, 5.165289207781052, 2.8618985886522115, 1.3904995480947102, 2.669941688971007, 4.731571990763635, 12.125338670311622, 2.2102970074048116, 3.625357606225907, 4.226486366981298, 4.68195616283432],
        pearson: -0.4372224674305455,
        spearman: -0.5218045112781955,
        ols_intercept: 3.37466059848508,
        ols_slope: -1.6995117451620672,
        ols_r_squared: 0.19116348602605432,
        welch_t: -5.289887263881231,
        welch_p: 2.8135035922002092e-05,
    },
    ReferenceCase {
        xs: &[2.0, 3.0, 1.0, -3.0, -2.5, 1.5, 1.0, -2.0, -1.0, 2.0, -2.5, 1.5, 1.0, -2.0, 0.5, 1.5, -0.5, -3.0, -1.5, -1.5, 0.5, 0.0, 1.0, 1.0, 1.0, 0.5, 0.5],
        ys: &[3.0, 4.0, 3.0, -1.0, -2.0, 2.0, 3.0, 0.0, 0.0, 4.0, -1.0, 3.0, 3.0, 0.0, 2.0, 1.0, 1.0, -3.0, 0.0, -2.0, 2.0, 0.0, 3.0, 1.0, 2.0, 2.0, 0.0],
        pearson: 0.8900862436453898,
        spearman: 0.8826944992184284,
        ols_intercept: 1.1111111111111112,
        ols_slope: 1.0,
        ols_r_squared: 0.7922535211267604,
        welch_t: -2.260100663648233,
        welch_p: 0.028087936444698827,
    },
    ReferenceCase {
        xs: &[-0.7918004331850889, 4.313324945781721, -2.4034331319820703, -2.9945559474586956, 1.114915507419373, 4.855841562587008, -4.139032399236981, -6.374816713769102, -3.489812599266454, -4.7390493859916285, 2.1261264371666604, -2.7034967124074383, -3.626828741700352, -2.902753408921876, 2.3087948906392364, 0.2349567690908259, -1.0757875233859175, 0.908889811995609, -4.338481826799811, -0.0070191781131949986, 1.0357176045199257, -7.1342242843224986, 3.5810757754165388, -2.4172686601645896, 1.7579120550860905, 5.622181578996295, 5.552122981447478, 4.883178130018981, -6.840658117146753, 2.704888737554566, -1.9977108088328603, -3.599403014152032, 0.03420609781742874, -4.234905165213088],
        ys: &[-1.1354706777590167, 9.025787441997444, -4.6773570656299785, -6.6038505711704145, 1.9403629909696087, 9.572008885882578, -8.207742366700161, -11.966658613497188, -7.220129558610651, -10.015187120984084, 4.401300845419442, -4.8555551525102505, -7.383300994428186, -6.136691189987781, 3.780230400492144, 0.7823705177696131, -1.7410639377965016, 2.518680569087347, -8.370414097643303, -0.8390722329656196, 1.5711294611919175, -14.000762607002079, 7.877794255764737, -4.588081645664461, 3.6058411883744217, 10.87852543005063, 10.234624857044626, 9.644801268865164, -13.59337351661318, 4.98478004764601, -3.469713106069107, -8.035632599367773, 0.1686028591034316, -8.446282194629326],
        pearson: 0.9979164895443354,
        spearman: 0.9978609625668448,
        ols_intercept: -0.03998497479134433,
        ols_slope: 1.975226879933708,
        ols_r_squared: 0.9958373201044897,
        welch_t: 0.5394692877102549,
        welch_p: 0.5920153876381348,
    },
    ReferenceCase {
        xs: &[1.6904848227612308, 1.1439248319745157, 0.3632083503878753, 0.6225760800539643, 0.9469442757410882, -0.5609222710773724, 0.2943870480774409, 0.5520363844312366, 0.43962153292249007, 1.7461217413091072, 1.4363068094785318, -2.311810745059724, 0.09775348579253115, 1.325099430873086, -2.191133667014268, 0.4190356118333088, -0.8726916781126572, 2.02910288448072, -0.32813855707560824, 2.519950525932227, -0.7370959514593773, -0.3260028742954729, 1.2904331391649089, -1.604715367636663, -1.1377147643699879, -0.7967026231351786, -0.44264812456977437, -0.13075657026224188, -0.790444005402661, -1.0519752358798404, -0.050005884210493005],
        ys: &[-2.249331853526064, -3.2811173929079707, 1.463780845158701, -1.1898266034154512, -3.1066711694414506, -4.441440527505658, -1.527976154243306, -4.259174762627858, -0.30886014885114776, -1.339901340764825, 0.5739740716099844, 0.7201396724984643, 2.7317826924286046, 0.7915387568332788, 1.5393329831553508, -2.3508908438184166, -1.9714404595032295, -1.0504937695760987, 0.7380488751526992, -1.9676231684552112, -0.4198925382109333, 0.021546717685014705, -2.0614397259812542, 1.7213101053819073, -1.3546155722431032, 3.441321050640771, 1.2624117942268547, 1.9344138008911045, 1.2129352253999652, 0.7395107356606936, -0.5988968498714253],
        pearson: -0.41902845363912306,
        spearman: -0.43346774193548393,
        ols_intercept: -0.3902175704221691,
        ols_slope: -0.6949335894357687,
        ols_r_squared: 0.1755848449591946,
        welch_t: 1.401680770940751,
        welch_p: 0.1672793048468614,
    },
    ReferenceCase {
        xs: &[-0.29123894239958326, 1.3475736187231868, -1.4286561259027428, -0.9665103368060732, 2.332968625742908, 0.7271704027429509, 1.7708498468691276, 1.1098628381732103, -4.006798725086964, 0.9954952461598661, -0.02807243316497803, 4.062759373151622, 2.2720198311493642, -2.844906669114184, 0.29416623952280313],
        ys: &[8.245104776027473, 8.728986989647055, 8.158737826189927, 7.576772652675478, 4.814601512911901, 0.7839226489263647, 6.33127061533817, 8.57164891537317, 10.448915630383947, -1.1338907948285755, -0.7691943756252666, 9.814308751473153, 6.768419449169333, 7.801136280564164, 7.1786046641812105],
        pearson: -0.16954519725748943,
        spearman: -0.175,
        ols_intercept: 6.3287954831019695,
        ols_slope: -0.30160508254021023,
        ols_r_squared: 0.028745573913081027,
        welch_t: -5.367505012292102,
        welch_p: 2.15972064760571e-05,
    },
    ReferenceCase {
        xs: &[1.0, -0.5, -1.5, 3.5, -2.5, 3.5, 0.5, -0.5, -2.5, -0.0],
        ys: &[3.0, -1.0, 1.0, 5.0, -2.0, 3.0, 1.0, 1.0, 0.0, 2.0],
        pearson: 0.8537009388429939,
        spearman: 0.8788989411561673,
        ols_intercept: 1.21760391198044,
        ols_slope: 0.8239608801955993,
        ols_r_squared: 0.7288052929814093,
        welch_t: -1.2808225205366761,
        welch_p: 0.21653387028338697,
    },
    ReferenceCase {
        xs: &[-0.29501226558567645, -0.8680264951057847, -0.48230509729893223, -0.7150422738361497, 0.610505690121454],
        ys: &[-0.2676828321934738, -2.426580667440434, -0.9214176376644636, -1.9141228474875478, 1.7561220360988072],
        pearson: 0.9881625661226902,
        spearman: 0.9999999999999999,
        ols_intercept: 0.2211975431128791,
        ols_slope: 2.7885731778890803,
        ols_r_squared: 0.9764652570861805,
        welch_t: 0.5213853557357719,
        welch_p: 0.6244071404723,
    },
    ReferenceCase {
        xs: &[-0.643568185112383, 1.903742124365908, 4.373958488122819, -0.7547520656038698, 0.05982252484241611, 1.0145060373235557, 2.21162431500446, 0.7557949371474482, 0.5722771771192545],
        ys: &[-0.4937437059377733, -0.535764267087822, -6.269920065275412, 2.0160641533482027, 1.2128396943238187, -1.788221989169792, -4.1826611555210205, 3.197674062079156, -2.446701111558384],
        pearson: -0.7716699707862842,
        spearman: -0.7166666666666667,
        ols_intercept: 0.4986885804648198,
        ols_slope: -1.4513897907376312,
        ols_r_squared: 0.5954745438133049,
        welch_t: 1.834028733544015,
        welch_p: 0.09116876417863656,
    },
    ReferenceCase {
        xs: &[-4.033138859511214, -0.1747881115358018, 3.1000388792172977, -1.544179578754599, -2.958655640156314, 4.556215231264264, -2.427757454671923, 5.960334198084977, 6.715392409960305, -0.8543646794954125, -2.034547170782136, 1.093464668559787],
        ys: &[3.213342932956309, 2.9005599082058584, 6.871248044333625, 5.198563073268264, 3.909032603042233, 6.2636185152823, 12.121610206137571, 11.710340876156645, 4.133035841153875, 11.696071777398174, 12.02071211110137, 7.7440406830346875],
        pearson: 0.03273021315212173,
        spearman: 0.08391608391608392,
        ols_intercept: 7.294869545986794,
        ols_slope: 0.032946953571830306,
        ols_r_squared: 0.0010712668529833183,
        welch_t: -4.491673101990922,
        welch_p: 0.00018154248641012496,
    },
    ReferenceCase {
        xs: &[-0.5, 1.5, 1.0, 0.5, -0.5, -0.0, 1.0, -1.0, 0.5, -0.0, 0.0, -1.5, -0.5, 3.0, -1.0],
        ys: &[2.0, 2.0, 1.0, 2.0, 0.0, 1.0, 3.0, 1.0, 1.0, 1.0, 1.0, 0.0, 0.0, 4.0, -1.0],
        pearson: 0.8142152225127139,
        spearman: 0.7536229332242572,
        ols_intercept: 1.05,
        ols_slope: 0.9,
        ols_r_squared: 0.6629464285714286,
        welch_t: -2.346254458415239,
        welch_p: 0.026347768019734322,
    },
    ReferenceCase {
        xs: &[-1.043301042348858, -2.427557484823405, -2.584063853523476, 0.3826016284463922, -1.2034486690725457, -0.2988862362554895, 2.605846740672301, -1.7548854093791397, -0.3625845944024379, 2.14741329032497, 0.1196608919906406, -1.1158872552106642, 2.3703975559948702, -0.13355823982971182, 1.494845703066091, -0.6084329454778551, -0.757057396180768, 0.1600068237416155],
        ys: &[-2.3086866783933333, -5.123175149596655, -4.926111087129786, 0.5527593822942508, -2.0389050244306284, -0.3118384912708865, 5.350891301132586, -3.8270735292570564, -0.48757283040340915, 4.649017021093629, 0.39854505809946467, -2.924964707256617, 4.646893191648521, -0.1349966579426037, 2.8845703418997326, -1.0809939622454285, -1.981246279410545, 0.27242969467337363],
        pearson: 0.9957022512394762,
        spearman: 0.9876160990712075,
        ols_intercept: -0.012937566118937704,
        ols_slope: 2.046462718460125,
        ols_r_squared: 0.991422973123361,
        welch_t: 0.2286166342594002,
        welch_p: 0.8210550733813458,
    },
    ReferenceCase {
        xs: &[-0.06124759687948947, -3.2957165181839048, -0.15220087418802147, -5.749873008602572, -0.4656071455702037, -7.566580692034549, -0.6735134199842032, -4.290540575448042, -7.943141642216332, -0.5419994363079117, -0.8757571106559262, -0.3822188497832254, 3.533025054362418, 3.3577596242391365, 2.4131442869535684, -4.1375771833154165, -1.4589457495376665, 1.5939865341751644, 2.3544326584253943, 0.6712950452474329, 3.726743151032169, -2.2902464530250404, 2.7343348519138826, -2.3629750233248483, -3.119770464276103, -0.3367369002205654, 1.1432179807251623, 6.8931520770147],
        ys: &[1.7585604754859723, -2.395115168840643, 0.4826315186420451, 6.266990854404722, -2.4542837152150887, 5.940609199587448, 3.0832257208396245, 8.454614174435054, 8.796959603101904, -1.551797852420774, -0.9931322432813837, 4.486903881948896, -3.0210898250323064, -6.227681919098354, -4.423403097736981, 3.4879109998712234, 2.0184301897478165, -3.3188043919215713, 0.48551854912303716, -0.8804443377622067, -6.604162399540625, -1.1897037204431538, -8.476465601717742, 2.2051388013143622, 2.1797931469394705, -2.0365493753433235, 1.3180035065757951, -5.803569074771978],
        pearson: -0.8170453411440854,
        spearman: -0.7887246852764094,
        ols_intercept: -0.5921363233574212,
        ols_slope: -1.0512248464824692,
        ols_r_squared: 0.6675630894852544,
        welch_t: -0.6336506782768302,
        welch_p: 0.5291460805206388,
    },
    ReferenceCase {
        xs: &[0.6461072082447723, -0.09690970731303153, -0.09580595237046383, 0.024053781834388534, 1.2201454253999096, 0.6331268657731983, 0.7665278225003775, 2.088891797912844, -0.17148251552155605, 1.6730520509646016, -0.8535463553828548, -0.9359065249491124, 0.21492032340138967, -1.023644524153494, 0.018446528481114895, -1.4340929372360054, 0.1557663528979104, -0.05495472917242625, 0.1163998548533714, -1.1297239542980768, 0.7236345839337582, -0.6771803227725999, -0.3372024551394067, 2.2176579547716306, 0.8755662503313684, -0.4899660795424914, -0.8882110887422647, -1.1895026471284817, 0.6934950248769719, 1.1846439023957924, 2.4394276664803503, -0.9624970743835009, -1.0754841574792824, 0.768466658876988, -1.7161657437830917],
        ys: &[5.4647587932272685, 11.419953771395129, 6.294562632664176, 3.78152781919619, 3.6253846837550694, 0.2712912022064309, 2.72579065997408, 9.301653794641108, 2.0228224335341465, 1.1670899236840655, 4.297761867736396, 4.532412662621303, 0.5088786086705168, 2.457618612079405, 2.458218988422482, 3.0661187467091233, 1.4855579897277784, 4.850212764047611, 2.4677490599348015, 2.0626216038067433, 6.926429436264712, 10.109075283561436, 3.006968232602544, 10.37968488068611, 4.108713930676255, -1.5228674035497427, 7.3968947343016485, 10.145805929458337, 6.331883775280516, -0.14027776299179173, 7.1994227982056085, 4.207731370712302, 2.4708295863908583, 5.898479827567148, 2.9733614358513436],
        pearson: 0.16027895636011752,
        spearman: 0.0792717086834734,
        ols_intercept: 4.346955162446229,
        ols_slope: 0.48397421847311073,
        ols_r_squared: 0.025689343851888438,
        welch_t: -7.508055393586883,
        welch_p: 3.0190292849387565e-09,
    },
    ReferenceCase {
        xs: &[-1.0, -1.0, -1.5, -2.5, 2.5, 0.5, 0.5, 0.5, -0.5, 1.5, -1.5, 2.5, 5.0, 1.0, 0.5, -2.5, 1.0, -1.0, 0.5, 1.0, -2.0, -2.0, -2.0],
        ys: &[1.0, 0.0, -1.0, -1.0, 4.0, 0.0, 0.0, 1.0, 0.0, 4.0, 0.0, 5.0, 6.0, 3.0, 1.0, -3.0, 1.0, 1.0, 3.0, 2.0, -2.0, 0.0, 0.0],
        pearson: 0.8938552236719333,
        spearman: 0.8869390561872681,
        ols_intercept: 1.1100655831194752,
        ols_slope: 1.0630168234958657,
        ols_r_squared: 0.7989771608856024,
        welch_t: -1.838237996649373,
        welch_p: 0.07298351269854506,
    },
];

pub struct KruskalCase {
    pub groups: &'static [&'static [f64]],
    pub h: f64,
    pub p: f64,
}

pub const KRUSKAL_CASES: [KruskalCase; 5] = [
    KruskalCase {
        groups: &[&[-0.26428290210292243, -0.14235568156532605, 0.4779860606030224, 0.13741890951369584, -1.0961391447734812, -0.6580076496229519, 0.10533666780415293, -0.03355155335984646, 0.7082147649885285, 0.4967811840706871, -1.1686483962986711, -0.3252576094783014, -0.5722516784739077, 0.7888601260324118, 0.02765760388223048, 0.047719863311648895, 0.7762336731830615, 0.6582507747105285, 0.035137803866136436, -0.08620754047737261, -1.5416303885962974], &[0.8938369960676629, -4.067627265913432, -0.8765163567736847, 1.5666426002944824, 4.819900640217193, -1.0537851015633062, -2.9881038585596835, 1.5970778262559182, -0.20144832152212655, 1.970886694675926, -0.21144809490386984, 5.430693772772978, -2.1840335506414372, 2.692879280336535, -0.9118781156741596, -2.8465987033450295], &[0.9781362065065102, 1.2611701564727475, -2.6141248500703615, -0.7424326952068557, 4.636470904748111, -1.7562943285837018, 4.710492070304939, 2.3140171095687068, -3.931527037872871, 4.262255603326329, -0.525402311276981]],
        h: 0.46849186103011675,
        p: 0.7911672198061421,
    },
    KruskalCase {
        groups: &[&[4.3584872115197815, -0.969849646426969, 2.20948206798014, -0.2258181044496892, -3.322102027230267, -0.44007999077581944, 2.2353709344789725, 0.5184103935248644, 2.1254042430052897, 1.446917993607264, -0.7325319711432879, -0.11024039266863518, 3.1986179715124314, -1.8453337287055318, 2.737256474591577, 0.7965282683518907, 3.0281832287451245, 1.0364043907518223, 0.10682698329032737, -1.3168723981414057, 0.7749832485596124, -0.7968981465689, 0.7752604343873908, -2.5678357072207394, -1.830069696890471, -0.5519129265518309, 0.642202224918415, 2.0107740519316764, -0.0018256542680066185, -0.4750988548175224, -0.7200373691819579, 3.229952254946946, 0.4776683143081588, -1.0187391775128463], &[0.47480951618465933, 2.94642347304771, -6.601595684167664, -4.67977984484328, -0.7157379936356709, -4.258112902361017, -6.164584959232753, -2.539635956889608, -0.5079267328366261, -0.5958391727667824, -8.204714947698486, 3.7426051151025908, 2.555327078622806, 0.2208700701589743, -2.041822375538692, -3.3184462135271597, 1.6429041139732894, -7.391211572607081, -0.40416964791593046, 0.3004937209531775, -2.3250299401869965, 0.6756646457593833, 3.3273025652171713, 6.438559301461196, -0.6059502524775973, -4.579218513002006, 0.9219924367365793, 0.8704002264177069, 1.1377788448963648, 1.2232044800770945, -2.739448032034196, -4.168428162423969, 1.30934550759596, -1.4888360491732902, -2.9196012101930475, -3.6948895724104402], &[3.9508599115817744, 3.1124354894312845, 3.46135587693016, 3.6148616165682412, 5.622917563427974, 2.730783883117228, 2.8006942195988365, 4.487845139402993, 4.76690570962438, 4.188288934709177, 2.951855124408687, 3.9716015084604246, 3.4610599468469863, 4.361024190866162, 2.8205845367567886, 3.2278193795128196, 4.691590014052819, 3.2389235369287244, 3.814908987234941, 4.997932844331816]],
        h: 39.74962292609354,
        p: 2.336033425908179e-09,
    },
    KruskalCase {
        groups: &[&[-0.7918004331850889, 4.313324945781721, -2.4034331319820703, -2.9945559474586956, 1.114915507419373, 4.855841562587008, -4.139032399236981, -6.374816713769102, -3.489812599266454, -4.7390493859916285, 2.1261264371666604, -2.7034967124074383, -3.626828741700352, -2.902753408921876, 2.3087948906392364, 0.2349567690908259, -1.0757875233859175, 0.908889811995609, -4.338481826799811, -0.0070191781131949986, 1.0357176045199257, -7.1342242843224986, 3.5810757754165388, -2.4172686601645896, 1.7579120550860905, 5.622181578996295, 5.552122981447478, 4.883178130018981, -6.840658117146753, 2.704888737554566, -1.9977108088328603, -3.599403014152032, 0.03420609781742874, -4.234905165213088], &[-2.249331853526064, -3.2811173929079707, 1.463780845158701, -1.1898266034154512, -3.1066711694414506, -4.441440527505658, -1.527976154243306, -4.259174762627858, -0.30886014885114776, -1.339901340764825, 0.5739740716099844, 0.7201396724984643, 2.7317826924286046, 0.7915387568332788, 1.5393329831553508, -2.3508908438184166, -1.9714404595032295, -1.0504937695760987, 0.7380488751526992, -1.9676231684552112, -0.4198925382109333, 0.021546717685014705, -2.0614397259812542, 1.7213101053819073, -1.3546155722431032, 3.441321050640771, 1.2624117942268547, 1.9344138008911045, 1.2129352253999652, 0.7395107356606936, -0.5988968498714253], &[2.708761057600417, 4.347573618723187, 1.5713438740972572, 2.0334896631939268, 5.332968625742907, 3.727170402742951, 4.770849846869128, 4.1098628381732105, -1.0067987250869637, 3.995495246159866, 2.971927566835022, 7.062759373151622, 5.272019831149365, 0.155093330885816, 3.294166239522803]],
        h: 18.90473680511633,
        p: 7.850341722786961e-05,
    },
    KruskalCase {
        groups: &[&[-0.29501226558567645, -0.8680264951057847, -0.48230509729893223, -0.7150422738361497, 0.610505690121454], &[-0.4937437059377733, -0.535764267087822, -6.269920065275412, 2.0160641533482027, 1.2128396943238187, -1.788221989169792, -4.1826611555210205, 3.197674062079156, -2.446701111558384], &[-2.0331388595112143, 1.8252118884641981, 5.100038879217298, 0.4558204212454009, -0.958655640156314, 6.556215231264264, -0.42775745467192294, 7.960334198084977, 8.715392409960305, 1.1456353205045875, -0.03454717078213587, 3.093464668559787]],
        h: 5.176638176638193,
        p: 0.07514624818963023,
    },
    KruskalCase {
        groups: &[&[-1.043301042348858, -2.427557484823405, -2.584063853523476, 0.3826016284463922, -1.2034486690725457, -0.2988862362554895, 2.605846740672301, -1.7548854093791397, -0.3625845944024379, 2.14741329032497, 0.1196608919906406, -1.1158872552106642, 2.3703975559948702, -0.13355823982971182, 1.494845703066091, -0.6084329454778551, -0.757057396180768, 0.1600068237416155], &[1.7585604754859723, -2.395115168840643, 0.4826315186420451, 6.266990854404722, -2.4542837152150887, 5.940609199587448, 3.0832257208396245, 8.454614174435054, 8.796959603101904, -1.551797852420774, -0.9931322432813837, 4.486903881948896, -3.0210898250323064, -6.227681919098354, -4.423403097736981, 3.4879109998712234, 2.0184301897478165, -3.3188043919215713, 0.48551854912303716, -0.8804443377622067, -6.604162399540625, -1.1897037204431538, -8.476465601717742, 2.2051388013143622, 2.1797931469394705, -2.0365493753433235, 1.3180035065757951, -5.803569074771978], &[1.6461072082447723, 0.9030902926869685, 0.9041940476295361, 1.0240537818343884, 2.2201454253999096, 1.6331268657731983, 1.7665278225003775, 3.088891797912844, 0.828517484478444, 2.6730520509646016, 0.14645364461714516, 0.06409347505088758, 1.2149203234013897, -0.02364452415349394, 1.0184465284811148, -0.4340929372360054, 1.1557663528979103, 0.9450452708275737, 1.1163998548533713, -0.12972395429807682, 1.7236345839337583, 0.3228196772274001, 0.6627975448605933, 3.2176579547716306, 1.8755662503313684, 0.5100339204575086, 0.11178891125773527, -0.18950264712848175, 1.693495024876972, 2.184643902395792, 3.4394276664803503, 0.03750292561649915, -0.07548415747928239, 1.768466658876988, -0.7161657437830917]],
        h: 6.595798741056171,
        p: 0.03696072670285787,
    },
];
