"""Default settings for the DR-DF Bayesian optimization runs.

Epidemic parameters:

SEIR_*: Deterministic SEIR model. TAU is the natural birth/death rate, BETA the contact rate, ALPHA the
exposed->infectious rate and GAMMA the recovery rate. S0, E0, I0, R0 are the initial population fractions.
SIS_*: Stochastic SIS model. SIGMA is the diffusion coefficient of the contact rate.
C1: Cost of infection per epoch
C2: Cost weight of the control
LOWER, UPPER: Bounds of the control value at every epoch
STEP_SIZE: Epochs per integration step (1 / STEP_SIZE must be an integer)


Optimizer parameters:

D: Reduced dimension
ITERATIONS: Loop budget of the optimizer
N_INIT: Number of random reduced strategies seeding the GP
FILL: Fill-in strategy. Available:
    * identical: hold the value of the segment start
    * uniform:   uniform draw between the segment endpoints
    * linear:    linear interpolation between the segment endpoints
    * normal:    normal draw with the mean/std of the segment endpoints
    * gp:        posterior mean of a 1-D GP over the epochs
N_ZONES: Number of bandit zones the control range is split into
M_POINTS: Initial reward (points sampled) of every zone
N_RANDOM: Points drawn by the bounded random search
SHRINK_LOWER, SHRINK_UPPER: Contraction of the random-search bounds when the bandit wins
ADAPTIVE_SHRINK: Only shrink the side farther from the bandit winner
K_WEIGHT: Weight of the posterior standard deviation in the LCB
LENGTH_SCALE: Matern52 length scale in normalized [0, 1] coordinates
JITTER: Initial diagonal jitter of the kernel factorization
MAX_JITTER: Largest jitter tried before giving up
PRIOR_MEAN: Constant prior mean of the GP
ADAM_*: Final local search. FD_STEP is the finite-difference step


Output parameters:

OUT_DIR: Base folder of the reports
LOG_DIR: Base folder of the TensorBoard logs (None disables them)

"""

# SEIR model
SEIR_TAU = 0.01
SEIR_BETA = 0.9
SEIR_ALPHA = 0.25
SEIR_GAMMA = 0.1
SEIR_S0 = 0.99
SEIR_E0 = 0.0
SEIR_I0 = 0.01
SEIR_R0 = 0.0
SEIR_T_F = 100

# SIS model
SIS_TAU = 0.01
SIS_BETA = 0.8
SIS_GAMMA = 0.2
SIS_SIGMA = 0.1
SIS_S0 = 0.97
SIS_I0 = 0.03
SIS_T_F = 200

# objective
C1 = 10000.0
C2 = 100.0
LOWER = 0.0
UPPER = 1.0
STEP_SIZE = 1.0

# optimizer
MODEL = 'seir'
D = 40
ITERATIONS = 100
N_INIT = 10
SEED = 0
FILL = 'linear'
FILL_STRATEGIES = ['identical', 'uniform', 'linear', 'normal', 'gp']

# sampling
N_ZONES = 10
M_POINTS = 5
N_RANDOM = 50
SHRINK_LOWER = 0.0
SHRINK_UPPER = 0.0
ADAPTIVE_SHRINK = False

# surrogate / acquisition
K_WEIGHT = 2.0
LENGTH_SCALE = 1.0
JITTER = 1e-8
MAX_JITTER = 1e-4
PRIOR_MEAN = 0.0

# local search
ADAM_STEPS = 100
ADAM_LEARNING_RATE = 0.02
ADAM_BETA1 = 0.9
ADAM_BETA2 = 0.999
ADAM_EPSILON = 1e-8
FD_STEP = 1e-3

# outputs
OUT_DIR = 'results/'
LOG_DIR = None
