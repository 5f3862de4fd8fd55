from .tensorboard import TensorBoardLogger, TENSORBOARD_ENV
