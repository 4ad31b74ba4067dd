package org.fixture.ha;

public interface FenceMethod {
    void checkArgs(String args) throws BadFencingConfigurationException;

    boolean tryFence(HAServiceTarget target, String args) throws BadFencingConfigurationException;
}
