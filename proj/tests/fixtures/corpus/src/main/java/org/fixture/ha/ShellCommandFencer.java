package org.fixture.ha;

import java.io.IOException;

import org.apache.commons.logging.Log;
import org.apache.commons.logging.LogFactory;
import org.apache.hadoop.conf.Configured;

public class ShellCommandFencer extends Configured implements FenceMethod {
    private static final Log LOG = LogFactory.getLog(ShellCommandFencer.class);

    @Override
    public void checkArgs(String args) throws BadFencingConfigurationException {
        if (args == null || args.isEmpty()) {
            throw new BadFencingConfigurationException("No command specified");
        }
        LOG.info("The parameter for the fencing method is " + args);
    }

    @Override
    public boolean tryFence(HAServiceTarget target, String cmd) {
        try {
            Process p = new ProcessBuilder("bash", "-e", "-c", cmd).start();
            return p.waitFor() == 0;
        } catch (IOException | InterruptedException e) {
            LOG.warn("Unable to fence the target service: " + e.getMessage());
            return false;
        }
    }
}
